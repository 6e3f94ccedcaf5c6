#include "matsos/scalarsos/pipeline.hpp"

#include "matsos/errors.hpp"
#include "matsos/multipoly/parser.hpp"

namespace matsos {

namespace {

std::optional<ScalarSOSCert> from_store(const Polynomial& p, const CertificateStore& store, const VarSet& vars,
                                        ScalarSOSUnavailable::Reasons& reasons) {
    const StoreRecord* rec = store.find(p);
    if (rec == nullptr) {
        reasons.emplace_back(provider::kStore, "no record with this target");
        return std::nullopt;
    }
    const std::string where = "record at line " + std::to_string(rec->line);
    if (!rec->multiplier) {
        ScalarSOSCert cert{RationalFunction(p), expand_squares(*rec), provider::kStore, std::nullopt};
        if (verify_scalar_cert(cert)) return cert;
        reasons.emplace_back(provider::kStore, where + ": squares do not add up to the target");
        return std::nullopt;
    }
    const Polynomial& m = *rec->multiplier;
    ScalarSOSCert product{RationalFunction(m * p), expand_squares(*rec), provider::kStore, std::nullopt};
    ScalarSOSCert multiplier_cert;
    try {
        multiplier_cert = scalar_sos_pipeline(m, CertificateStore{}, vars);
    } catch (const ScalarSOSUnavailable&) {
        reasons.emplace_back(provider::kDenominatorLift, where + ": no certificate for the multiplier");
        return std::nullopt;
    }
    try {
        return sos_denominator_lift(p, m, product, multiplier_cert);
    } catch (const VerificationFailed& e) {
        reasons.emplace_back(provider::kDenominatorLift, where + ": " + e.what());
    }
    return std::nullopt;
}

}  // namespace

ScalarSOSCert scalar_sos_pipeline(const Polynomial& p, const CertificateStore& store, const VarSet& vars) {
    if (p.nvars() != vars.size()) throw DomainError("polynomial and variable set disagree on variable count");
    ScalarSOSUnavailable::Reasons reasons;
    auto accept = [](ScalarSOSCert cert) {
        if (!verify_scalar_cert(cert)) throw VerificationFailed("provider '" + cert.provider + "' failed verification");
        return cert;
    };

    if (p.is_zero()) return ScalarSOSCert{RationalFunction(p), {}, provider::kZero, std::nullopt};
    reasons.emplace_back(provider::kZero, "nonzero");

    if (p.is_constant()) {
        try {
            return accept(sos_constant(p.constant_value(), p.nvars()));
        } catch (const DomainError& e) {
            reasons.emplace_back(provider::kConstant, e.what());
        }
    } else {
        reasons.emplace_back(provider::kConstant, "not a constant");
    }

    try {
        return accept(sos_perfect_square(p));
    } catch (const NotApplicable& e) {
        reasons.emplace_back(provider::kPerfectSquare, e.what());
    }

    try {
        return accept(sos_monomial_squares(p));
    } catch (const NotApplicable& e) {
        reasons.emplace_back(provider::kMonomialSquares, e.what());
    }

    if (auto cert = from_store(p, store, vars, reasons)) return accept(std::move(*cert));

    try {
        return accept(sos_gram_attempt(p));
    } catch (const NotFound& e) {
        reasons.emplace_back(provider::kGram, e.what());
    }

    throw ScalarSOSUnavailable(print_poly(p, vars), std::move(reasons));
}

}  // namespace matsos
