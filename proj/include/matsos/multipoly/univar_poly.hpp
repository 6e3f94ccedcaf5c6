#pragma once

#include "matsos/multipoly/rational_function.hpp"

#include <vector>

namespace matsos {

/// Polynomial in t with coefficients in Q(x1, ..., xv); coeffs()[i] is the
/// coefficient of t^i. The leading coefficient is nonzero; the zero
/// polynomial has no coefficients.
class UnivarPoly {
public:
    explicit UnivarPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    UnivarPoly(std::vector<RationalFunction> coeffs, std::size_t nvars);
    static UnivarPoly from_polynomials(const std::vector<Polynomial>& coeffs, std::size_t nvars);
    /// c * t^k
    static UnivarPoly monomial(const RationalFunction& c, std::size_t k);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<RationalFunction>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Zero when i is out of range.
    RationalFunction coeff(std::size_t i) const;
    const RationalFunction& leading() const { return coeffs_.back(); }

    UnivarPoly operator-() const;
    UnivarPoly& operator+=(const UnivarPoly& rhs);
    UnivarPoly& operator-=(const UnivarPoly& rhs);
    friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
    friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator*(const RationalFunction& c, const UnivarPoly& f);

    /// Coefficientwise rational-function equality.
    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b);

    UnivarPoly derivative() const;
    /// Divides by the leading coefficient and reduces each coefficient.
    UnivarPoly monic() const;
    /// Every coefficient in lowest terms.
    UnivarPoly reduced() const;
    /// Common-denominator form: polynomials c_i and D with coeff(i) = c_i / D.
    std::pair<std::vector<Polynomial>, Polynomial> cleared() const;

private:
    void trim();

    std::size_t nvars_;
    std::vector<RationalFunction> coeffs_;
};

struct UnivarDivMod {
    UnivarPoly quotient;
    UnivarPoly remainder;
};

/// Euclidean division f = q*g + r, deg r < deg g. Throws DivisionByZero for g == 0.
UnivarDivMod divmod(const UnivarPoly& f, const UnivarPoly& g);
UnivarPoly mod(const UnivarPoly& f, const UnivarPoly& g);

/// Monic gcd in F[t]; gcd(0, 0) == 0.
UnivarPoly gcd(const UnivarPoly& f, const UnivarPoly& g);

struct ExtEuclidResult {
    UnivarPoly gcd;         ///< monic
    UnivarPoly b_cofactor;  ///< u
    UnivarPoly p_cofactor;  ///< w
};

/// u*b + w*p == g == gcd(b, p). Runs a fraction-free pseudo-remainder
/// sequence over Q[x][t], so u and w come out over the single denominator
/// lc(g_raw). Throws DivisionByZero for p == 0.
ExtEuclidResult ext_euclid(const UnivarPoly& b, const UnivarPoly& p);

/// f / gcd(f, f'), monic. Throws DomainError for f == 0.
UnivarPoly squarefree_part(const UnivarPoly& f);

}  // namespace matsos
