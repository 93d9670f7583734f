#pragma once

#include <string_view>

#include "delpezzo/poly.hpp"

namespace delpezzo {

// Parses a univariate polynomial such as "z^5 + 3*z^3 - 2*z^2 + z - 7".
// Coefficients are integers or fractions ("5/3*z^2"); whitespace is ignored;
// the '*' between coefficient and variable is optional. Repeated powers add.
// Throws ParseError.
Poly parse_polynomial(std::string_view text, char var = 'z');

}  // namespace delpezzo
