#pragma once

// Matrix file format:
//
//   # comment
//   vars: x1 x2 x3
//   dim: 3
//   entry 1 1: x1^2 + 1
//   entry 1 2: -x1*x2
//
// Indices are 1-based. Each unordered pair (i, j) may appear once; the other
// triangle is filled by symmetry and absent entries are zero.

#include "matsos/multipoly/varset.hpp"
#include "matsos/polymatrix/symbolic_matrix.hpp"

#include <string>
#include <string_view>

namespace matsos {

struct MatrixInput {
    VarSet vars;
    SymbolicMatrix matrix;
};

/// Throws ParseError (with line number) on malformed input.
MatrixInput parse_matrix_file(std::string_view text);
MatrixInput read_matrix_file(const std::string& path);

/// Upper triangle, zero entries omitted.
std::string format_matrix_file(const VarSet& vars, const SymbolicMatrix& a);

/// Whole file as a string; throws Error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace matsos
