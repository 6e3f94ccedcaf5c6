#include "matsos/exactarith/bigrat.hpp"

#include "matsos/errors.hpp"

#include <cctype>
#include <functional>

namespace matsos {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) throw ParseError("empty integer in rational literal '" + std::string(whole) + "'", 0);
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) throw ParseError("sign without digits in '" + std::string(whole) + "'", 0);
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("invalid digit in rational literal '" + std::string(whole) + "'", i);
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

}  // namespace

BigRat::BigRat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRat(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("signed denominator in '" + std::string(text) + "'", slash + 1);
    return BigRat(num, parse_integer(den_text, text));
}

BigRat BigRat::abs() const {
    BigRat out;
    out.value_ = ::abs(value_);
    return out;
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational");
    BigRat out;
    mpq_inv(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

BigRat BigRat::operator-() const {
    BigRat out;
    out.value_ = -value_;
    return out;
}

BigRat& BigRat::operator+=(const BigRat& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRat& BigRat::operator-=(const BigRat& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRat& BigRat::operator*=(const BigRat& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRat& BigRat::operator/=(const BigRat& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string BigRat::to_string() const { return value_.get_str(10); }

std::size_t BigRat::hash() const {
    std::size_t h = std::hash<std::string>{}(value_.get_num().get_str(16));
    return h ^ (std::hash<std::string>{}(value_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.to_string(); }

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw DomainError("square root of negative integer");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool rational_sqrt(const BigRat& q, BigRat& root) {
    if (q.sign() < 0) return false;
    BigInt n = q.num(), d = q.den();
    if (!is_perfect_square(n) || !is_perfect_square(d)) return false;
    root = BigRat(isqrt(n), isqrt(d));
    return true;
}

}  // namespace matsos
