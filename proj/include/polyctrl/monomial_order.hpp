#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polyctrl/ring.hpp"

namespace polyctrl {

/// Lex, graded reverse lex, or a two-block elimination order, each applied
/// after a variable priority permutation (priority[0] is the most
/// significant variable).
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// First `split` variables of `priority` form the eliminated block; each
  /// block is compared by grevlex.
  static MonomialOrder block(std::vector<std::size_t> priority, std::size_t split);
  static MonomialOrder with_priority(Kind kind, std::vector<std::size_t> priority);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }
  std::span<const std::size_t> priority() const { return priority_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t split);
  std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) const;

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::size_t split_ = 0;
};

}  // namespace polyctrl
