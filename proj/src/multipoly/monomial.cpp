#include "matsos/multipoly/monomial.hpp"

#include "matsos/errors.hpp"

#include <numeric>

namespace matsos {

Monomial::Monomial(std::vector<Exponent> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

Monomial Monomial::with_exponent(std::size_t var, Exponent e) const {
    Monomial out = *this;
    out.degree_ = out.degree_ - out.exps_[var] + e;
    out.exps_[var] = e;
    return out;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (exps_.size() != rhs.exps_.size()) throw DomainError("monomial variable count mismatch");
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
    out.degree_ += rhs.degree_;
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial out = other;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
    out.degree_ -= degree_;
    return out;
}

bool Monomial::all_even() const {
    for (auto e : exps_) {
        if (e % 2 != 0) return false;
    }
    return true;
}

Monomial Monomial::half() const {
    Monomial out = *this;
    for (auto& e : out.exps_) e /= 2;
    out.degree_ /= 2;
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : exps_) {
        h ^= e + 0x9e3779b9U;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace matsos
