#pragma once

#include "matsos/multipoly/rational_function.hpp"
#include "matsos/multipoly/univar_poly.hpp"

#include <vector>

namespace matsos {

using RatMatrix = std::vector<std::vector<BigRat>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Square matrix over Q(x1, ..., xv), row-major.
class SymbolicMatrix {
public:
    SymbolicMatrix() = default;
    /// n x n zero matrix.
    SymbolicMatrix(std::size_t n, std::size_t nvars);
    static SymbolicMatrix identity(std::size_t n, std::size_t nvars);
    /// Throws DomainError for a ragged or non-square input.
    static SymbolicMatrix from_polynomials(const PolyMatrix& rows, std::size_t nvars);

    std::size_t dim() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return nvars_; }

    const RationalFunction& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    RationalFunction& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool is_symmetric() const;
    bool is_polynomial() const;
    bool is_zero() const;
    /// Entries as polynomials; throws DomainError if any has a nontrivial denominator.
    PolyMatrix polynomial_entries() const;
    RationalFunction trace() const;
    SymbolicMatrix transpose() const;
    /// Every entry reduced to lowest terms.
    SymbolicMatrix reduced() const;

    SymbolicMatrix& operator+=(const SymbolicMatrix& rhs);
    SymbolicMatrix& operator-=(const SymbolicMatrix& rhs);
    friend SymbolicMatrix operator+(SymbolicMatrix a, const SymbolicMatrix& b) { return a += b; }
    friend SymbolicMatrix operator-(SymbolicMatrix a, const SymbolicMatrix& b) { return a -= b; }
    friend SymbolicMatrix operator*(const SymbolicMatrix& a, const SymbolicMatrix& b);
    friend SymbolicMatrix operator*(const RationalFunction& c, const SymbolicMatrix& m);

    /// Entry-wise rational-function equality.
    friend bool operator==(const SymbolicMatrix& a, const SymbolicMatrix& b);

    /// Throws DivisionByZero if a denominator vanishes at `point`.
    RatMatrix eval(std::span<const BigRat> point) const;

private:
    void check_same_shape(const SymbolicMatrix& other) const;

    std::size_t n_ = 0;
    std::size_t nvars_ = 0;
    std::vector<RationalFunction> entries_;
};

SymbolicMatrix mat_add(const SymbolicMatrix& a, const SymbolicMatrix& b);
SymbolicMatrix mat_mul(const SymbolicMatrix& a, const SymbolicMatrix& b);
SymbolicMatrix mat_scalar_mul(const RationalFunction& c, const SymbolicMatrix& a);
SymbolicMatrix mat_pow(const SymbolicMatrix& a, unsigned k);

/// f(A) by Horner's rule over a common denominator of f's coefficients.
SymbolicMatrix eval_at_matrix(const UnivarPoly& f, const SymbolicMatrix& a);

/// Determinant over Q of an exact rational matrix.
BigRat rational_det(RatMatrix m);

}  // namespace matsos
