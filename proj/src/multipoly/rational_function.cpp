#include "matsos/multipoly/rational_function.hpp"

#include "matsos/errors.hpp"

namespace matsos {

namespace {

// Denominators larger than this (in terms) trigger a gcd reduction after an
// addition that had to build an lcm.
constexpr std::size_t kReduceThreshold = 64;

}  // namespace

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(BigRat(1), num_.nvars())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw DomainError("numerator and denominator over different variable counts");
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(BigRat(1), num_.nvars());
        return;
    }
    if (den_.is_constant()) {
        num_ *= den_.constant_value().inverse();
        den_ = Polynomial::constant(BigRat(1), num_.nvars());
        return;
    }
    if (!den_.leading_coeff().is_one()) {
        BigRat inv = den_.leading_coeff().inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
    if (is_polynomial()) return num_;
    return divide_exact(num_, den_);
}

RationalFunction RationalFunction::reduced() const {
    if (is_polynomial()) return *this;
    Polynomial g = gcd(num_, den_);
    if (g.is_constant()) return *this;
    return RationalFunction(*divide_exact(num_, g), *divide_exact(den_, g));
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (num_.is_zero()) den_ = Polynomial::constant(BigRat(1), num_.nvars());
        return *this;
    }
    if (rhs.is_polynomial()) {
        num_ += rhs.num_ * den_;
        return *this;
    }
    if (is_polynomial()) {
        num_ = num_ * rhs.den_ + rhs.num_;
        den_ = rhs.den_;
        normalize();
        return *this;
    }
    if (auto k = divide_exact(rhs.den_, den_)) {
        num_ = num_ * *k + rhs.num_;
        den_ = rhs.den_;
        normalize();
        return *this;
    }
    if (auto k = divide_exact(den_, rhs.den_)) {
        num_ += rhs.num_ * *k;
        normalize();
        return *this;
    }
    Polynomial g = gcd(den_, rhs.den_);
    Polynomial left = *divide_exact(rhs.den_, g);   // lcm / den_
    Polynomial right = *divide_exact(den_, g);      // lcm / rhs.den_
    num_ = num_ * left + rhs.num_ * right;
    den_ = den_ * left;
    normalize();
    if (den_.size() > kReduceThreshold) *this = reduced();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = rhs;
    // Cancel the structurally obvious common factors.
    if (den_ == rhs.num_) {
        den_ = rhs.den_;
        normalize();
        return *this;
    }
    if (num_ == rhs.den_) {
        num_ = rhs.num_;
        normalize();
        return *this;
    }
    num_ *= rhs.num_;
    if (!rhs.is_polynomial()) den_ *= rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

BigRat RationalFunction::eval(std::span<const BigRat> point) const {
    BigRat d = den_.eval(point);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

}  // namespace matsos
