#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyctrl/ext_int.hpp"
#include "polyctrl/monomial_order.hpp"
#include "polyctrl/polynomial.hpp"

namespace polyctrl {

/// Ideal of a (non-Laurent) polynomial ring given by generators. Zero
/// generators are dropped on construction.
class Ideal {
 public:
  explicit Ideal(Ring ring);
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
};

/// Reduced, monic Gröbner basis sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  std::vector<Monomial> leading_monomials() const;

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

struct DimensionResult {
  int dim = -1;                 ///< -1 for the empty variety
  ExtInt codim = ExtInt::infinity();
  std::vector<std::size_t> independent_set;  ///< witness, size dim (empty when dim == -1)
};

/// Largest supported ring for ideal_dimension (subset enumeration).
inline constexpr std::size_t kMaxDimensionVars = 8;

/// lcm-cofactor combination cancelling the leading terms of f and g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Full multivariate-division remainder; divisors are tried in the given order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

/// Buchberger's algorithm with the normal selection strategy and both of
/// Buchberger's criteria. Returns the unique reduced basis.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

bool contains_one(const GroebnerBasis& basis);

/// Dimension of the variety from the leading-term ideal: the size of the
/// largest variable subset containing the support of no leading monomial.
DimensionResult ideal_dimension(const GroebnerBasis& basis);
DimensionResult ideal_dimension(const GroebnerBasis& basis, const Ring& ring);

/// Generators of ideal ∩ Q[remaining variables], in the original ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop);

/// ideal : f^∞, by adjoining t, adding 1 - t*f and eliminating t.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// Ideal equality via mutual membership.
bool ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace polyctrl
