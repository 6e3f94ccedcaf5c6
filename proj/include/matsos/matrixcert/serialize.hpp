#pragma once

#include "matsos/matrixcert/certificate.hpp"

#include <string>
#include <string_view>

namespace matsos {

/// JSON text with fields version, vars, dim, minpoly {d, coefficients},
/// scalar_certs, squares (n x n entries as {num, den}) and square_count.
std::string serialize_certificate(const MatrixSOSCert& cert);

/// Inverse of serialize_certificate. Throws ParseError on malformed JSON or
/// fields; the scalar-certificate targets are rebuilt from the minimal
/// polynomial.
MatrixSOSCert parse_certificate(std::string_view text);

MatrixSOSCert read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const MatrixSOSCert& cert);

}  // namespace matsos
