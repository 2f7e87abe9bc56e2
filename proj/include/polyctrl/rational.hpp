#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyctrl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers, q > 0). Result is canonical.
Rational parse_rational(std::string_view text);

/// Also accepts plain decimals such as "0.25" (converted exactly).
Rational parse_decimal_or_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace polyctrl
