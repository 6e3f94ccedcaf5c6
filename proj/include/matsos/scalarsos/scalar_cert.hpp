#pragma once

#include "matsos/multipoly/rational_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace matsos {

namespace provider {
inline constexpr const char* kZero = "zero";
inline constexpr const char* kConstant = "constant";
inline constexpr const char* kPerfectSquare = "perfect-square";
inline constexpr const char* kMonomialSquares = "monomial-squares";
inline constexpr const char* kStore = "store";
inline constexpr const char* kDenominatorLift = "denominator-lift";
inline constexpr const char* kGram = "gram";
}  // namespace provider

/// target == sum of squares[k]^2. `multiplier` records the polynomial whose
/// square was divided out by a denominator lift, if any.
struct ScalarSOSCert {
    RationalFunction target;
    std::vector<RationalFunction> squares;
    std::string provider;
    std::optional<Polynomial> multiplier;
};

/// Exact symbolic check of sum g_k^2 == target.
bool verify_scalar_cert(const ScalarSOSCert& cert);

/// Every term c*x^(2e) with c > 0 becomes up to four squares (s_r x^e).
/// Throws NotApplicable otherwise.
ScalarSOSCert sos_monomial_squares(const Polynomial& p);

/// At most four rational squares (one if q is a rational square).
/// Throws DomainError for q < 0.
ScalarSOSCert sos_constant(const BigRat& q, std::size_t nvars);

/// p == c * q^2 with c >= 0 rational. Throws NotApplicable otherwise.
ScalarSOSCert sos_perfect_square(const Polynomial& p);

/// Certificate for p from certificates of multiplier*p and of multiplier:
/// p = sum_{k,l} (sigma_l h_k / multiplier)^2. Throws DomainError for a zero
/// multiplier and VerificationFailed when the inputs do not check out.
ScalarSOSCert sos_denominator_lift(const Polynomial& p, const Polynomial& multiplier,
                                   const ScalarSOSCert& cert_of_product, const ScalarSOSCert& cert_of_multiplier);

/// Gram-matrix attempt: a particular Gram matrix from the exact
/// coefficient-matching system (off-diagonal unknowns pivoted first, then
/// diagonal-first as a fallback), then LDL^T. Throws NotFound, which is not
/// a proof that no certificate exists.
ScalarSOSCert sos_gram_attempt(const Polynomial& p);

}  // namespace matsos
