#pragma once

#include <climits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyctrl/rational.hpp"
#include "polyctrl/ring.hpp"

namespace polyctrl {

class MonomialOrder;

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = INT_MIN;

/// Exact multivariate (Laurent) polynomial with rational coefficients.
///
/// Terms are kept sorted by descending exponent vector (lexicographic, x1
/// most significant) with no zero coefficients, so equal polynomials have
/// identical term lists and iteration order is reproducible.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  /// Canonicalizes: sorts, merges equal monomials, prunes zeros.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Monomial& m, const Rational& c = 1);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True for a single term with coefficient of any value.
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_negative_exponents() const;

  /// Max over terms of the nonnegative exponent sum; kZeroDegree for 0.
  int degree() const;
  /// Highest exponent of variable `var` (kZeroDegree for 0).
  int degree_in(std::size_t var) const;
  Rational coefficient(const Monomial& m) const;
  /// Bitmask of the variables that occur.
  std::uint32_t support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  Polynomial scaled(const Rational& c) const;
  Polynomial shifted(const Monomial& m) const;  ///< multiply by a monomial
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient of the given order (no-op for 0).
  Polynomial monic(const MonomialOrder& order) const;

  /// Same terms viewed in another ring with the same number of variables.
  Polynomial rebased(Ring ring) const;
  /// Embeds into a ring whose first nvars() variables coincide with ours.
  Polynomial embedded(Ring larger) const;
  /// Drops trailing variables; all dropped exponents must be zero.
  Polynomial projected(Ring smaller) const;
  /// New variable i is old variable perm[i].
  Polynomial permuted(Ring ring, std::span<const std::size_t> perm) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);

/// Order-maximal term. Throws DomainError on 0 or negative exponents.
Term leading_term(const Polynomial& p, const MonomialOrder& order);

/// Multivariate division by one divisor: p = q*d + r with no term of r
/// divisible by the leading monomial of d.
std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& d,
                                         const MonomialOrder& order);
/// Exact quotient; throws DomainError when d does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

/// Monic gcd of univariate polynomials (Euclid). gcd(0, 0) = 0.
Polynomial gcd_univariate(const Polynomial& p, const Polynomial& q);

/// Splits a Laurent polynomial as q * unit where q has no negative exponents
/// and the unit only carries the negative exponents that were cleared.
std::pair<Polynomial, Monomial> laurent_clear(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace polyctrl
