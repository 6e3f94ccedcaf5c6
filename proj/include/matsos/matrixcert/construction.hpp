#pragma once

#include "matsos/polymatrix/minpoly.hpp"

namespace matsos {

/// For p(t) = sum_i (-1)^(d-i) a_i t^i:
///   b(t) = sum_{i odd} a_i t^(i-1),  r(t) = sum_{i even} a_i t^i,
/// so t*b(t) - r(t) = +-p(t) and b(A)*A = r(A).
struct EvenOddSplit {
    UnivarPoly b;
    UnivarPoly r;
};

/// Throws LemmaViolation if a_1 == 0 and DomainError for a malformed form.
EvenOddSplit split_even_odd(const MinPolyForm& mp);

/// q with q*b == 1 mod p and deg q < d, so q(A) = b(A)^-1. Throws NotCoprime
/// when gcd(b, p) != 1.
UnivarPoly invert_b_mod_p(const EvenOddSplit& split, const MinPolyForm& mp);

}  // namespace matsos
