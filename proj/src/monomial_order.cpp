#include "polyctrl/monomial_order.hpp"

#include <numeric>

#include "polyctrl/errors.hpp"

namespace polyctrl {
namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_permutation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i : p) {
    if (i >= p.size() || seen[i]) throw DomainError("variable priority is not a permutation");
    seen[i] = true;
  }
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t split)
    : kind_(kind), priority_(std::move(priority)), split_(split) {
  check_permutation(priority_);
  if (kind_ == Kind::Block && (split_ == 0 || split_ >= priority_.size())) {
    throw DomainError("block order split must leave both blocks nonempty");
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  return MonomialOrder(Kind::Lex, identity(nvars), 0);
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return MonomialOrder(Kind::Grevlex, identity(nvars), 0);
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> priority, std::size_t split) {
  return MonomialOrder(Kind::Block, std::move(priority), split);
}

MonomialOrder MonomialOrder::with_priority(Kind kind, std::vector<std::size_t> priority) {
  if (kind == Kind::Block) throw DomainError("use MonomialOrder::block for block orders");
  return MonomialOrder(kind, std::move(priority), 0);
}

std::strong_ordering MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b,
                                                  std::size_t lo, std::size_t hi) const {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[priority_[i]];
    db += b[priority_[i]];
  }
  if (da != db) return da <=> db;
  // Ties: the monomial with the smaller exponent in the least significant
  // differing variable is the larger one.
  for (std::size_t i = hi; i-- > lo;) {
    const int ea = a[priority_[i]];
    const int eb = b[priority_[i]];
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = priority_.size();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        const int ea = a[priority_[i]];
        const int eb = b[priority_[i]];
        if (ea != eb) return ea <=> eb;
      }
      return std::strong_ordering::equal;
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::Block: {
      auto first = grevlex_range(a, b, 0, split_);
      if (first != 0) return first;
      return grevlex_range(a, b, split_, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace polyctrl
