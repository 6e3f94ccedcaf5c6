#include "matsos/multipoly/polynomial.hpp"

#include "matsos/errors.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace matsos {

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return a.mono > b.mono; }

}  // namespace

Polynomial Polynomial::constant(const BigRat& c, std::size_t nvars) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
    if (index >= nvars) throw DomainError("variable index out of range");
    Polynomial p(nvars);
    p.terms_.push_back({Monomial(nvars).with_exponent(index, 1), BigRat(1)});
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const BigRat& c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.mono.nvars() != nvars) throw DomainError("term has wrong number of variables");
    }
    std::sort(terms.begin(), terms.end(), term_greater);
    Polynomial p(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }

BigRat Polynomial::constant_value() const {
    if (terms_.empty()) return BigRat(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_[0].coeff;
}

std::uint64_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

Monomial::Exponent Polynomial::degree_in(std::size_t var) const {
    Monomial::Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

BigRat Polynomial::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return BigRat(0);
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_) {
        throw DomainError("polynomials over different variable counts (" + std::to_string(nvars_) + " vs " +
                          std::to_string(other.nvars_) + ")");
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

// this += scale * rhs, by merging two sorted term lists.
void Polynomial::add_scaled(const Polynomial& rhs, const BigRat& scale) {
    check_compatible(rhs);
    if (rhs.terms_.empty() || scale.is_zero()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->mono > a->mono) {
            merged.push_back({b->mono, b->coeff * scale});
            ++b;
        } else {
            BigRat c = a->coeff + b->coeff * scale;
            if (!c.is_zero()) merged.push_back({std::move(a->mono), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    add_scaled(rhs, BigRat(1));
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    add_scaled(rhs, BigRat(-1));
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const BigRat& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        // Monomial times polynomial keeps the order.
        const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
        const auto& other = a.terms_.size() == 1 ? b : a;
        out.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_) out.terms_.push_back({t.mono * single.mono, t.coeff * single.coeff});
        return out;
    }
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::vector<Polynomial::Term> acc;
    index.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono * tb.mono;
            auto [it, inserted] = index.try_emplace(m, acc.size());
            if (inserted) {
                acc.push_back({std::move(m), ta.coeff * tb.coeff});
            } else {
                acc[it->second].coeff += ta.coeff * tb.coeff;
            }
        }
    }
    std::erase_if(acc, [](const Polynomial::Term& t) { return t.coeff.is_zero(); });
    std::sort(acc.begin(), acc.end(), term_greater);
    out.terms_ = std::move(acc);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(BigRat(1), nvars_);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

Polynomial Polynomial::shifted(const Monomial& m) const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.mono = t.mono * m;
    return out;
}

BigRat Polynomial::eval(std::span<const BigRat> point) const {
    if (point.size() != nvars_) {
        throw DomainError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                          std::to_string(nvars_));
    }
    // Cache powers per variable; exponents are small in practice.
    std::vector<std::vector<BigRat>> powers(nvars_);
    auto power = [&](std::size_t var, Monomial::Exponent e) -> const BigRat& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(BigRat(1));
        while (cache.size() <= e) cache.push_back(cache.back() * point[var]);
        return cache[e];
    };
    BigRat sum;
    for (const auto& t : terms_) {
        BigRat v = t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.mono[i] > 0) v *= power(i, t.mono[i]);
        }
        sum += v;
    }
    return sum;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(var)) + 1);
    for (const auto& t : terms_) buckets[t.mono[var]].push_back({t.mono.with_exponent(var, 0), t.coeff});
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    // Removing one variable from a sorted list may reorder terms, so re-sort.
    for (auto& b : buckets) out.push_back(from_terms(nvars_, std::move(b)));
    return out;
}

Polynomial Polynomial::from_coefficients_in(std::span<const Polynomial> coeffs, std::size_t var, std::size_t nvars) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms()) {
            terms.push_back({t.mono.with_exponent(var, static_cast<Monomial::Exponent>(k)), t.coeff});
        }
    }
    return from_terms(nvars, std::move(terms));
}

std::size_t Polynomial::hash() const {
    std::size_t h = nvars_;
    for (const auto& t : terms_) {
        h = h * 1000003U ^ t.mono.hash();
        h = h * 1000003U ^ t.coeff.hash();
    }
    return h;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.nvars() != b.nvars()) throw DomainError("polynomials over different variable counts");
    Polynomial quotient(a.nvars());
    if (a.is_zero()) return quotient;
    if (b.is_constant()) return a * b.constant_value().inverse();
    const auto& lead = b.leading_term();
    BigRat inv_lead = lead.coeff.inverse();
    Polynomial rem = a;
    std::vector<Polynomial::Term> qterms;
    while (!rem.is_zero()) {
        const auto& lt = rem.leading_term();
        if (!lead.mono.divides(lt.mono)) return std::nullopt;
        if (lt.mono.degree() < lead.mono.degree()) return std::nullopt;
        Polynomial::Term t{lead.mono.quotient_of(lt.mono), lt.coeff * inv_lead};
        rem -= b.shifted(t.mono) * t.coeff;
        qterms.push_back(std::move(t));
    }
    // Quotient terms were produced in strictly descending order.
    return Polynomial::from_terms(a.nvars(), std::move(qterms));
}

std::optional<Polynomial> exact_sqrt(const Polynomial& p) {
    if (p.is_zero()) return p;
    const auto& lt = p.leading_term();
    BigRat lead_root;
    if (!lt.mono.all_even() || !rational_sqrt(lt.coeff, lead_root)) return std::nullopt;
    Polynomial::Term head{lt.mono.half(), lead_root};
    Polynomial root = Polynomial::monomial(head.mono, head.coeff);
    Polynomial rem = p - root * root;
    BigRat inv_twice_head = (BigRat(2) * head.coeff).inverse();
    while (!rem.is_zero()) {
        const auto& r = rem.leading_term();
        if (!head.mono.divides(r.mono)) return std::nullopt;
        Monomial m = head.mono.quotient_of(r.mono);
        // Later terms of the root must be strictly below its head.
        if (!(m < head.mono)) return std::nullopt;
        Polynomial t = Polynomial::monomial(m, r.coeff * inv_twice_head);
        rem -= t * (root * BigRat(2) + t);
        root += t;
    }
    return root;
}

}  // namespace matsos
