#pragma once

// Polynomial input for the command line.
//
//   poly      := coeff-list | expr
//   coeff-list:= ['['] int (',' int)+ [']']        coefficients c0, c1, ..., cn
//   expr      := [sign] term (sign term)*
//   term      := int ['*'] [power] | power
//   power     := var ['^' int]
//   var       := one letter, the same letter throughout
//
// Whitespace is ignored. Coefficients are integers of any size.

#include <string_view>

#include "traceform/poly.hpp"

namespace traceform::cli {

/// Throws Error(Parse) with the offending position.
Poly parse_polynomial(std::string_view text);

/// Decimal integer with optional sign; also accepts 1e9 style powers of ten.
Int parse_integer(std::string_view text);

/// "c0,c1,...,cn".
std::string coefficient_list(const Poly& f);

}  // namespace traceform::cli
