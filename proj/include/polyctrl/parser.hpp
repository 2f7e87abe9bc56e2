#pragma once

#include <string_view>

#include "polyctrl/polynomial.hpp"

namespace polyctrl {

/// Parses an expression such as "x1^2 - 2*x1*x2 + 1/3" in `ring`.
///
/// Grammar (whitespace ignored, multiplication must be explicit):
///   expr   := term (("+"|"-") term)*
///   term   := unary ("*" unary)*
///   unary  := ("+"|"-") unary | factor
///   factor := base ("^" int)?
///   base   := int ("/" uint)? | var | "(" expr ")"
/// Negative exponents need a Laurent ring and a single-term base.
Polynomial parse_polynomial(std::string_view src, const Ring& ring);

}  // namespace polyctrl
