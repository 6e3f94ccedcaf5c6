#pragma once

#include "matsos/exactarith/bigrat.hpp"
#include "matsos/multipoly/monomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace matsos {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so the representation is canonical: two polynomials are
/// equal iff their term vectors are equal. The zero polynomial has no terms.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        BigRat coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(const BigRat& c, std::size_t nvars);
    static Polynomial variable(std::size_t index, std::size_t nvars);
    static Polynomial monomial(const Monomial& m, const BigRat& c);
    /// Sums like terms and sorts; input order is irrelevant.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const;
    /// Value of a constant polynomial; caller checks is_constant().
    BigRat constant_value() const;

    /// Greatest term in graded-lex order; caller checks !is_zero().
    const Term& leading_term() const { return terms_.front(); }
    const BigRat& leading_coeff() const { return terms_.front().coeff; }
    std::uint64_t total_degree() const;
    Monomial::Exponent degree_in(std::size_t var) const;
    bool contains_var(std::size_t var) const { return degree_in(var) > 0; }
    /// Coefficient of `m` (zero when absent).
    BigRat coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const BigRat& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigRat& c) { return a *= c; }
    friend Polynomial operator*(const BigRat& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned k) const;
    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;
    /// Multiplies every term by monomial m.
    Polynomial shifted(const Monomial& m) const;

    /// Exact substitution. Throws DomainError if point.size() != nvars().
    BigRat eval(std::span<const BigRat> point) const;

    /// View as a univariate polynomial in `var`: result[k] is the coefficient
    /// of var^k (a polynomial not involving var).
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients_in(std::span<const Polynomial> coeffs, std::size_t var, std::size_t nvars);

    std::size_t hash() const;

private:
    void check_compatible(const Polynomial& other) const;
    void add_scaled(const Polynomial& rhs, const BigRat& scale);

    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// q with a == q * b, or nullopt if b does not divide a. Throws DivisionByZero for b == 0.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor over Q (gcd(0, 0) == 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Positive rational c such that every coefficient of every p in `ps`,
/// divided by c, is an integer and those integers are coprime. 1 when all are zero.
BigRat numeric_content(std::span<const Polynomial> ps);

/// Exact polynomial square root: q with q*q == p and positive leading
/// coefficient, or nullopt.
std::optional<Polynomial> exact_sqrt(const Polynomial& p);

}  // namespace matsos
