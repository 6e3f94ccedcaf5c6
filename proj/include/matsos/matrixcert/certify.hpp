#pragma once

#include "matsos/matrixcert/certificate.hpp"
#include "matsos/scalarsos/store.hpp"

#include <cstdint>

namespace matsos {

struct CertifyOptions {
    int samples = 100;
    std::uint64_t seed = 0;
    bool check_commutation = true;
};

namespace stage {
inline constexpr const char* kInput = "input";
inline constexpr const char* kPsdCheck = "psd-check";
inline constexpr const char* kMinimalPolynomial = "minimal-polynomial";
inline constexpr const char* kLemmaCheck = "lemma-check";
inline constexpr const char* kScalarSOS = "scalar-sos";
inline constexpr const char* kSplit = "split";
inline constexpr const char* kInvert = "invert";
inline constexpr const char* kBuild = "build";
inline constexpr const char* kVerify = "verify";
}  // namespace stage

/// Full pipeline: sampled PSD refutation, minimal polynomial, lemma form,
/// scalar certificates per coefficient, even/odd split, b(A)^-1, squares,
/// verification. Errors keep their type and carry the failing stage
/// (Error::stage()). NotPSD carries the sampled witness.
MatrixSOSCert certify(const SymbolicMatrix& a, const VarSet& vars, const CertificateStore& store,
                      const CertifyOptions& options = {});

}  // namespace matsos
