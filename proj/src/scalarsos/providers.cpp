#include "matsos/errors.hpp"
#include "matsos/exactarith/four_squares.hpp"
#include "matsos/scalarsos/scalar_cert.hpp"

namespace matsos {

namespace {

ScalarSOSCert checked(ScalarSOSCert cert) {
    if (!verify_scalar_cert(cert)) {
        throw VerificationFailed(std::string("provider '") + cert.provider + "' produced an invalid certificate");
    }
    return cert;
}

}  // namespace

bool verify_scalar_cert(const ScalarSOSCert& cert) {
    RationalFunction sum(cert.target.nvars());
    for (const auto& g : cert.squares) {
        if (g.nvars() != cert.target.nvars()) return false;
        sum += g * g;
    }
    return sum == cert.target;
}

ScalarSOSCert sos_constant(const BigRat& q, std::size_t nvars) {
    if (q.sign() < 0) throw DomainError("negative constant " + q.to_string() + " is not a sum of squares");
    ScalarSOSCert cert{RationalFunction::constant(q, nvars), {}, provider::kConstant, std::nullopt};
    if (q.is_zero()) return cert;
    BigRat root;
    if (rational_sqrt(q, root)) {
        cert.squares.push_back(RationalFunction::constant(root, nvars));
    } else {
        for (const auto& part : four_squares_rational(q).parts) {
            if (!part.is_zero()) cert.squares.push_back(RationalFunction::constant(part, nvars));
        }
    }
    return checked(std::move(cert));
}

ScalarSOSCert sos_monomial_squares(const Polynomial& p) {
    ScalarSOSCert cert{RationalFunction(p), {}, provider::kMonomialSquares, std::nullopt};
    for (const auto& t : p.terms()) {
        if (t.coeff.sign() < 0) throw NotApplicable("term with a negative coefficient");
        if (!t.mono.all_even()) throw NotApplicable("term with an odd exponent");
    }
    for (const auto& t : p.terms()) {
        Polynomial base = Polynomial::monomial(t.mono.half(), BigRat(1));
        for (const auto& part : four_squares_rational(t.coeff).parts) {
            if (!part.is_zero()) cert.squares.emplace_back(base * part);
        }
    }
    return checked(std::move(cert));
}

ScalarSOSCert sos_perfect_square(const Polynomial& p) {
    const std::size_t nvars = p.nvars();
    if (p.is_zero()) return ScalarSOSCert{RationalFunction(p), {}, provider::kPerfectSquare, std::nullopt};
    const BigRat c = p.leading_coeff();
    if (c.sign() < 0) throw NotApplicable("negative leading coefficient");
    auto root = exact_sqrt(p * c.inverse());
    if (!root) throw NotApplicable("no exact polynomial square root");
    ScalarSOSCert cert{RationalFunction(p), {}, provider::kPerfectSquare, std::nullopt};
    for (const auto& s : sos_constant(c, nvars).squares) cert.squares.emplace_back(*root * s.num().constant_value());
    return checked(std::move(cert));
}

ScalarSOSCert sos_denominator_lift(const Polynomial& p, const Polynomial& multiplier,
                                   const ScalarSOSCert& cert_of_product, const ScalarSOSCert& cert_of_multiplier) {
    if (multiplier.is_zero()) throw DomainError("denominator lift with a zero multiplier");
    if (!(cert_of_product.target == RationalFunction(multiplier * p)) || !verify_scalar_cert(cert_of_product)) {
        throw VerificationFailed("certificate of multiplier * p does not check out");
    }
    if (multiplier.is_one()) {
        ScalarSOSCert same = cert_of_product;
        same.target = RationalFunction(p);
        return same;
    }
    if (!(cert_of_multiplier.target == RationalFunction(multiplier)) || !verify_scalar_cert(cert_of_multiplier)) {
        throw VerificationFailed("certificate of the multiplier does not check out");
    }
    const RationalFunction inv = RationalFunction(multiplier).inverse();
    ScalarSOSCert cert{RationalFunction(p), {}, provider::kDenominatorLift, multiplier};
    for (const auto& h : cert_of_product.squares) {
        for (const auto& sigma : cert_of_multiplier.squares) cert.squares.push_back(sigma * h * inv);
    }
    if (!verify_scalar_cert(cert)) throw VerificationFailed("lifted certificate does not check out");
    return cert;
}

}  // namespace matsos
