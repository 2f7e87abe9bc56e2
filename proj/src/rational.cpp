#include "polyctrl/rational.hpp"

#include <cctype>
#include <string>

#include "polyctrl/errors.hpp"

namespace polyctrl {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::size_t offset) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
    ++offset;
  }
  if (!all_digits(s)) throw ParseError("expected integer", offset);
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(text.substr(0, slash), 0);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("expected unsigned denominator", slash + 1);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_decimal_or_rational(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool negative = !whole.empty() && whole.front() == '-';
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
  if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
    throw ParseError("malformed decimal", 0);
  }
  Integer den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  Rational r(negative ? Integer(-num) : num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace polyctrl
