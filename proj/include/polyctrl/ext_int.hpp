#pragma once

#include <compare>
#include <optional>
#include <string>

namespace polyctrl {

/// Integer extended by +infinity. Used for the codimension of an empty variety.
class ExtInt {
 public:
  constexpr ExtInt(int value) : value_(value) {}  // NOLINT: implicit on purpose
  static constexpr ExtInt infinity() { return ExtInt(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Finite value; only valid when !is_infinite().
  constexpr int value() const { return *value_; }

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }

  /// "inf" or the decimal value.
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

 private:
  constexpr ExtInt() = default;
  std::optional<int> value_;
};

}  // namespace polyctrl
