#pragma once

#include "matsos/exactarith/bigrat.hpp"

#include <array>

namespace matsos {

/// Four rationals whose squares add up to the decomposed value.
struct FourSquares {
    std::array<BigRat, 4> parts;

    BigRat sum_of_squares() const;
    /// Number of nonzero parts.
    int nonzero_count() const;
};

/// Lagrange decomposition of a nonnegative integer. Parts are nonnegative
/// and sorted in descending order; the result is a pure function of n.
/// Throws DomainError for n < 0.
FourSquares four_squares_integer(const BigInt& n);

/// Decomposes q = a/b as ab/b^2, so every part has a denominator dividing b.
/// Throws DomainError for q < 0.
FourSquares four_squares_rational(const BigRat& q);

}  // namespace matsos
