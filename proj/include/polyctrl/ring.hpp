#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyctrl {

/// Hard cap on ring size. Monomials store exponents inline.
inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector. Unused slots past `size()` are always zero, so the
/// defaulted comparison is a lexicographic order on exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_span(std::span<const int> exponents);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e) { exp_[i] = e; }

  /// Sum of all exponents (may be negative for Laurent monomials).
  int total_degree() const;
  /// Sum of the nonnegative parts of the exponents.
  int positive_degree() const;
  bool is_one() const;
  bool has_negative() const;

  /// True when every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const;
  /// True when the two monomials share no variable.
  bool coprime(const Monomial& other) const;
  /// True when the support of *this lies inside the bitmask `vars`.
  bool supported_in(std::uint32_t vars) const;
  std::uint32_t support() const;

  Monomial operator*(const Monomial& other) const;
  /// Exponent-wise difference; caller guarantees divisibility when needed.
  Monomial operator/(const Monomial& other) const;
  Monomial inverse() const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::int32_t, kMaxVars> exp_{};
  std::uint8_t n_ = 0;
};

/// Polynomial ring Q[x1..xn] or Laurent ring Q[x1^±1..xn^±1]. Cheap to copy.
class Ring {
 public:
  Ring(std::vector<std::string> var_names, bool laurent = false);

  /// Ring with variables x1..xn.
  static Ring standard(std::size_t n, bool laurent = false, std::string_view prefix = "x");

  std::size_t nvars() const { return data_->names.size(); }
  const std::vector<std::string>& var_names() const { return data_->names; }
  const std::string& var_name(std::size_t i) const { return data_->names[i]; }
  bool laurent() const { return data_->laurent; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Ring with_laurent(bool laurent) const;
  /// Appends one variable with a name not already in use, derived from `hint`.
  Ring with_extra_variable(std::string_view hint) const;
  /// Reorders variables: new variable i is old variable perm[i].
  Ring permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::vector<std::string> names;
    bool laurent;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace polyctrl
