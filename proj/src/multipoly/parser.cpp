#include "matsos/multipoly/parser.hpp"

#include "matsos/errors.hpp"

#include <cctype>
#include <limits>

namespace matsos {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        Polynomial p = expr();
        skip_ws();
        if (!at_end()) {
            if (peek() == '/') throw ParseError("division is only allowed inside rational literals", pos_);
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            if (c == '+') {
                acc += term();
            } else {
                acc -= term();
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("exponent must be a nonnegative integer", pos_);
            }
            unsigned long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > std::numeric_limits<Monomial::Exponent>::max() / 2) throw ParseError("exponent too large", start);
                ++pos_;
            }
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Polynomial rational() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("division is only allowed inside rational literals", pos_ - 1);
            }
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        std::string_view literal = text_.substr(start, pos_ - start);
        try {
            return Polynomial::constant(BigRat::parse(literal), vars_.size());
        } catch (const DivisionByZero&) {
            throw ParseError("zero denominator in rational literal", start);
        }
    }

    Polynomial variable() {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = vars_.index_of(name);
        if (!idx) throw UnknownVariable(name, start);
        return Polynomial::variable(*idx, vars_.size());
    }

    std::string_view text_;
    const VarSet& vars_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const VarSet& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const VarSet& vars) { return ExprParser(text, vars).parse(); }

std::string print_poly(const Polynomial& p, const VarSet& vars) {
    if (p.nvars() != vars.size()) throw DomainError("polynomial and variable set disagree on variable count");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        BigRat mag = t.coeff.abs();
        if (first) {
            if (t.coeff.sign() < 0) out += '-';
        } else {
            out += t.coeff.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_text(t.mono, vars);
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + '*' + mono;
        }
    }
    return out;
}

std::string print_rf(const RationalFunction& f, const VarSet& vars) {
    if (f.is_polynomial()) return print_poly(f.num(), vars);
    return "(" + print_poly(f.num(), vars) + ")/(" + print_poly(f.den(), vars) + ")";
}

std::string print_univar(const UnivarPoly& f, const VarSet& vars, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const auto& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        bool unit = c.is_polynomial() && c.num().is_one();
        if (power.empty()) {
            out += "(" + print_rf(c, vars) + ")";
        } else if (unit) {
            out += power;
        } else {
            out += "(" + print_rf(c, vars) + ")*" + power;
        }
    }
    return out;
}

}  // namespace matsos
