#pragma once

#include <string>

#include "reflexa/poly.hpp"

namespace reflexa {

// Parses the textual polynomial syntax: `^` for powers, `*` optional between
// factors, integer or rational coefficients, parentheses allowed.
// Examples: "X*Z - Y^2", "3X^2Y - 1/2*W", "(X+Y)^2".
// Variable names must match the ring's declared names exactly.
Poly parse_poly(const DescPtr& ctx, const std::string& text);

}  // namespace reflexa
