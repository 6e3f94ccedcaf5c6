#pragma once

#include "matsos/multipoly/polynomial.hpp"

#include <span>

namespace matsos {

/// Element of Q(x1, ..., xv), stored as num/den.
///
/// The denominator is nonzero and monic (leading coefficient 1 in graded-lex
/// order); constant denominators are folded into the numerator. Reduction by
/// the polynomial gcd is lazy: arithmetic only cancels common factors it can
/// see cheaply, and equality is decided by cross-multiplication, so
/// correctness never depends on the fraction being in lowest terms.
class RationalFunction {
public:
    explicit RationalFunction(std::size_t nvars = 0) : num_(nvars), den_(Polynomial::constant(BigRat(1), nvars)) {}
    RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(const BigRat& c, std::size_t nvars) {
        return RationalFunction(Polynomial::constant(c, nvars));
    }

    std::size_t nvars() const noexcept { return num_.nvars(); }
    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Polynomial value if den divides num exactly.
    std::optional<Polynomial> as_polynomial() const;

    /// Fraction in lowest terms (monic denominator).
    RationalFunction reduced() const;
    /// Throws DivisionByZero on zero.
    RationalFunction inverse() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    /// Cross-multiplication test a*d == c*b.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    /// Throws DivisionByZero if the denominator vanishes at `point`.
    BigRat eval(std::span<const BigRat> point) const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

}  // namespace matsos
