#pragma once

#include "matsos/multipoly/varset.hpp"
#include "matsos/scalarsos/scalar_cert.hpp"
#include "matsos/scalarsos/store.hpp"

namespace matsos {

/// Providers in order: zero, constant, perfect square, monomial squares,
/// store (plain or denominator lift), Gram attempt. The first verified
/// certificate wins. Throws ScalarSOSUnavailable with every provider's reason.
ScalarSOSCert scalar_sos_pipeline(const Polynomial& p, const CertificateStore& store, const VarSet& vars);

}  // namespace matsos
