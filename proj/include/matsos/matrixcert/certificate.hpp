#pragma once

#include "matsos/matrixcert/construction.hpp"
#include "matsos/multipoly/varset.hpp"
#include "matsos/scalarsos/scalar_cert.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace matsos {

/// A = sum_k squares[k]^2 with every square a symmetric polynomial in A.
struct MatrixSOSCert {
    std::size_t dim = 0;
    VarSet vars;
    MinPolyForm minpoly;
    /// Keyed by coefficient index i; present for every nonzero a_i.
    std::map<int, ScalarSOSCert> scalar_certs;
    std::vector<SymbolicMatrix> squares;
    std::size_t square_count = 0;
    /// Seconds per certify() stage. Not serialized.
    std::vector<std::pair<std::string, double>> timings;
};

/// Number of squares the construction emits:
///   (sum_{i odd} c_i) * (sum_{j even} c_j),
/// c_i the square count of a_i's certificate (0 when a_i == 0).
std::size_t expected_square_count(const MinPolyForm& mp, const std::map<int, ScalarSOSCert>& scalar_certs);

/// Emits M = s*u*q(A)*A^((i-1+j)/2) for odd i, even j, s in cert(a_i),
/// u in cert(a_j), ordered by i, then j, then s, then u. a_d gets the
/// one-square certificate {1} if absent. Verifies the result before
/// returning. Throws MissingScalarCert or VerificationFailed.
MatrixSOSCert build_squares(const SymbolicMatrix& a, const MinPolyForm& mp, const UnivarPoly& q,
                            std::map<int, ScalarSOSCert> scalar_certs, const VarSet& vars);

struct MatrixDiscrepancy {
    std::string check;                 // dimension, count, symmetry, sum, commutation
    std::optional<std::size_t> square;  // 0-based square index, when one is to blame
    std::size_t row = 0;                // 0-based
    std::size_t col = 0;
    std::string detail;
};

struct MatrixVerifyReport {
    bool dimensions_ok = true;
    bool count_ok = true;
    bool symmetric = true;
    bool sum_matches = true;
    bool commutes = true;
    bool commutation_checked = false;
    /// Squares fall into classes of scalar multiples of each other; the sum
    /// and commutation checks run once per class.
    std::size_t classes = 0;
    std::optional<MatrixDiscrepancy> discrepancy;

    bool ok() const { return dimensions_ok && count_ok && symmetric && sum_matches && commutes; }
};

/// Independent check of a certificate against A: every square symmetric,
/// sum of squares equal to A, and optionally every square commuting with A
/// and with every other square. Never throws on a bad certificate.
MatrixVerifyReport verify_matrix_cert(const SymbolicMatrix& a, const MatrixSOSCert& cert,
                                      bool check_commutation = true);

}  // namespace matsos
