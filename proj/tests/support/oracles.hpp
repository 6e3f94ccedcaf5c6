#pragma once

// Independent reference implementations used only by tests. Nothing here
// shares code paths with the library routines they check.

#include "matsos/exactarith/bigrat.hpp"
#include "matsos/multipoly/polynomial.hpp"
#include "matsos/polymatrix/symbolic_matrix.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace matsos::testing {

/// Every nonincreasing quadruple (a >= b >= c >= d >= 0) with a^2+b^2+c^2+d^2 == n.
inline std::vector<std::array<long, 4>> brute_force_four_squares(long n) {
    std::vector<std::array<long, 4>> out;
    long bound = 0;
    while (bound * bound < n) ++bound;
    for (long a = bound; a >= 0; --a)
        for (long b = a; b >= 0; --b)
            for (long c = b; c >= 0; --c)
                for (long d = c; d >= 0; --d)
                    if (a * a + b * b + c * c + d * d == n) out.push_back({a, b, c, d});
    return out;
}

/// Laplace expansion along the first row.
inline Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(BigRat(1), 0);
    const std::size_t nvars = m[0][0].nvars();
    if (n == 1) return m[0][0];
    Polynomial det(nvars);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * cofactor_det(minor);
        if (col % 2 == 0) det += term; else det -= term;
    }
    return det;
}

/// p(A) as sum_i c_i A^i with explicit powers, independent of Horner evaluation.
inline SymbolicMatrix eval_by_powers(const UnivarPoly& p, const SymbolicMatrix& a) {
    SymbolicMatrix acc(a.dim(), a.nvars());
    for (int i = 0; i <= p.degree(); ++i) {
        acc += p.coeff(static_cast<std::size_t>(i)) * mat_pow(a, static_cast<unsigned>(i));
    }
    return acc;
}

/// Product of (t - l) over the distinct values l, as a polynomial over Q.
inline UnivarPoly distinct_root_product(const std::vector<BigRat>& roots) {
    std::set<BigRat> distinct(roots.begin(), roots.end());
    UnivarPoly out({RationalFunction::constant(BigRat(1), 0)}, 0);
    for (const auto& l : distinct) {
        out = out * UnivarPoly({RationalFunction::constant(-l, 0), RationalFunction::constant(BigRat(1), 0)}, 0);
    }
    return out;
}

}  // namespace matsos::testing
