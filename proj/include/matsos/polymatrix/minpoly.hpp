#pragma once

#include "matsos/polymatrix/symbolic_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace matsos {

/// Determinant of a square polynomial matrix by fraction-free elimination.
Polynomial det_bareiss(PolyMatrix m);
/// Throws DomainError if `a` has non-polynomial entries.
Polynomial det_bareiss(const SymbolicMatrix& a);

struct PrincipalMinor {
    std::vector<std::size_t> rows;  // 0-based, ascending
    Polynomial value;
};

/// Nonempty subsets of {0..n-1}, by size and then lexicographically.
std::vector<std::vector<std::size_t>> principal_index_sets(std::size_t n);

/// All 2^n - 1 nonempty principal minors, ordered by size and then
/// lexicographically by index set. Rejects non-polynomial entries.
std::vector<PrincipalMinor> principal_minors(const SymbolicMatrix& a);

/// det(tI - A), monic of degree n.
UnivarPoly charpoly(const SymbolicMatrix& a);

/// Minimal polynomial as p(t) = sum_i (-1)^(d-i) a_i t^i with a_d = 1.
struct MinPolyForm {
    int d = 0;
    std::vector<Polynomial> a;  // a[0..d]

    /// The monic polynomial p(t) itself.
    UnivarPoly to_univar() const;

    friend bool operator==(const MinPolyForm&, const MinPolyForm&) = default;
};

/// Converts a monic polynomial with polynomial coefficients into the
/// alternating form. Throws DomainError if p is not monic or has a
/// non-polynomial coefficient.
MinPolyForm alternating_form(const UnivarPoly& p);

/// Least-degree monic polynomial annihilating A, by finding the first linear
/// dependence among I, A, A^2, ... over Q(x).
UnivarPoly krylov_minimal_polynomial(const SymbolicMatrix& a);

/// Squarefree part of the characteristic polynomial, checked by p(A) = 0;
/// falls back to the Krylov method. Throws NotDiagonalizable when the true
/// minimal polynomial has a repeated factor.
MinPolyForm minimal_polynomial(const SymbolicMatrix& a);

struct LemmaReport {
    int samples = 0;
};

/// Checks a_1 != 0 (so t^2 does not divide p) and samples every a_i at
/// random points looking for a negative value. Throws LemmaViolation.
LemmaReport check_lemma_form(const MinPolyForm& mp, int samples = 100, std::uint64_t seed = 0);

}  // namespace matsos
