#pragma once

// Expression grammar (whitespace insignificant):
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := digits ('/' digits)?
//   var      := [A-Za-z_][A-Za-z0-9_]*
//
// '/' is only legal inside a rational literal; inputs are polynomials.

#include "matsos/multipoly/polynomial.hpp"
#include "matsos/multipoly/rational_function.hpp"
#include "matsos/multipoly/univar_poly.hpp"
#include "matsos/multipoly/varset.hpp"

#include <string>
#include <string_view>

namespace matsos {

/// Expanded canonical polynomial. Throws ParseError (with offset) on
/// malformed input and UnknownVariable for names outside `vars`.
Polynomial parse_poly(std::string_view text, const VarSet& vars);

/// Canonical text: terms in descending graded-lex order, e.g.
/// "3*x1^2 + 3*x2^2 + 3*x3^2"; the zero polynomial prints as "0".
std::string print_poly(const Polynomial& p, const VarSet& vars);

/// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string print_rf(const RationalFunction& f, const VarSet& vars);

/// Coefficients in descending powers of `var`, e.g. "t^2 + (x1)*t - 1".
std::string print_univar(const UnivarPoly& f, const VarSet& vars, const std::string& var = "t");

}  // namespace matsos
