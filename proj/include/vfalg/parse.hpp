#pragma once

// Text input for polynomials and vector fields.
//
//   poly  := terms in + - * ^ ( ) over rationals and variable names
//   field := poly-valued coefficients times D(x), derivatives rightmost,
//            e.g. "u1*D(u2) - 2*th1*th2*D(th1)" or "(u1 + u2)*D(u1)"

#include "vfalg/svf.hpp"

#include <string_view>

namespace vfalg {

SuperPolynomial parse_polynomial(const Coords& coords, std::string_view text);
SuperVectorField parse_field(const Coords& coords, std::string_view text);

}  // namespace vfalg
