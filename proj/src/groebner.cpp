#include "polyctrl/groebner.hpp"

#include <algorithm>
#include <bit>

#include "polyctrl/errors.hpp"

namespace polyctrl {
namespace {

// Working representation: terms in increasing order, leading term at back().
using SortedPoly = std::vector<Term>;

SortedPoly to_sorted(const Polynomial& p, const MonomialOrder& order) {
  SortedPoly out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.less(a.mono, b.mono); });
  return out;
}

Polynomial from_sorted(const Ring& ring, SortedPoly terms) {
  return Polynomial(ring, std::move(terms));
}

// f <- f - c * m * g
void subtract_multiple(SortedPoly& f, const Rational& c, const Monomial& m, const SortedPoly& g,
                       const MonomialOrder& order) {
  SortedPoly out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  Rational tmp;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(std::move(f[i++]));
      continue;
    }
    const Monomial gm = g[j].mono * m;
    const auto cmp = i == f.size() ? std::strong_ordering::less : order.compare(gm, f[i].mono);
    if (cmp > 0) {
      out.push_back(std::move(f[i++]));
    } else if (cmp < 0) {
      tmp = c * g[j].coeff;
      out.push_back({gm, Rational(-tmp)});
      ++j;
    } else {
      tmp = c * g[j].coeff;
      f[i].coeff -= tmp;
      if (f[i].coeff != 0) out.push_back(std::move(f[i]));
      ++i;
      ++j;
    }
  }
  f = std::move(out);
}

void make_monic(SortedPoly& f) {
  if (f.empty() || f.back().coeff == 1) return;
  const Rational inv = 1 / f.back().coeff;
  for (auto& t : f) t.coeff *= inv;
}

SortedPoly reduce_sorted(SortedPoly p, std::span<const SortedPoly> basis,
                         const MonomialOrder& order) {
  SortedPoly remainder;  // collected in decreasing order
  while (!p.empty()) {
    const Term& lt = p.back();
    const SortedPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.back().mono.divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(std::move(p.back()));
      p.pop_back();
      continue;
    }
    const Rational c = lt.coeff / divisor->back().coeff;
    const Monomial m = lt.mono / divisor->back().mono;
    subtract_multiple(p, c, m, *divisor, order);
  }
  std::reverse(remainder.begin(), remainder.end());
  return remainder;
}

SortedPoly s_poly_sorted(const SortedPoly& f, const SortedPoly& g, const MonomialOrder& order) {
  const Monomial l = Monomial::lcm(f.back().mono, g.back().mono);
  SortedPoly s;
  // s = (l / LM f) * f / LC f - (l / LM g) * g / LC g
  subtract_multiple(s, Rational(-1) / f.back().coeff, l / f.back().mono, f, order);
  subtract_multiple(s, 1 / g.back().coeff, l / g.back().mono, g, order);
  return s;
}

void check_polynomial_ring(const Ring& ring) {
  if (ring.laurent()) throw DomainError("ideal computations need a non-Laurent ring");
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerRun {
 public:
  BuchbergerRun(const MonomialOrder& order) : order_(order) {}

  std::vector<SortedPoly> run(std::vector<SortedPoly> generators) {
    for (auto& g : generators) add(std::move(g));
    while (!pairs_.empty()) {
      const std::size_t pick = select();
      const CriticalPair pair = pairs_[pick];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
      pending_[pair.i][pair.j] = false;
      const Monomial& a = basis_[pair.i].back().mono;
      const Monomial& b = basis_[pair.j].back().mono;
      if (a.coprime(b)) continue;
      if (chain_criterion(pair)) continue;
      SortedPoly s = reduce_sorted(s_poly_sorted(basis_[pair.i], basis_[pair.j], order_), basis_,
                                   order_);
      if (!s.empty()) add(std::move(s));
    }
    return std::move(basis_);
  }

 private:
  void add(SortedPoly g) {
    make_monic(g);
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(g));
    for (auto& row : pending_) row.push_back(false);
    pending_.emplace_back(basis_.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      pairs_.push_back({i, k, Monomial::lcm(basis_[i].back().mono, basis_[k].back().mono)});
      pending_[i][k] = true;
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return a < b ? pending_[a][b] : pending_[b][a];
  }

  // Skip (i, j) when some k with LM(k) | lcm(i, j) has both (i, k) and (j, k)
  // already treated.
  bool chain_criterion(const CriticalPair& pair) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis_[k].back().mono.divides(pair.lcm)) continue;
      if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) return true;
    }
    return false;
  }

  // Normal strategy: smallest lcm, ties broken by the smallest (i, j).
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs_.size(); ++p) {
      const auto cmp = order_.compare(pairs_[p].lcm, pairs_[best].lcm);
      if (cmp < 0 || (cmp == 0 && std::pair(pairs_[p].i, pairs_[p].j) <
                                      std::pair(pairs_[best].i, pairs_[best].j))) {
        best = p;
      }
    }
    return best;
  }

  const MonomialOrder& order_;
  std::vector<SortedPoly> basis_;
  std::vector<CriticalPair> pairs_;
  std::vector<std::vector<bool>> pending_;
};

std::vector<SortedPoly> reduce_basis(std::vector<SortedPoly> g, const MonomialOrder& order) {
  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<SortedPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = g[i].back().mono;
      const Monomial& mj = g[j].back().mono;
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Interreduce tails against the other elements; leading terms are untouched.
  std::vector<SortedPoly> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    SortedPoly lead{minimal[i].back()};
    SortedPoly tail(minimal[i].begin(), minimal[i].end() - 1);
    std::vector<SortedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    SortedPoly r = reduce_sorted(std::move(tail), others, order);
    r.push_back(std::move(lead.back()));
    make_monic(r);
    reduced[i] = std::move(r);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const SortedPoly& a, const SortedPoly& b) {
    return order.less(a.back().mono, b.back().mono);
  });
  return reduced;
}

}  // namespace

Ideal::Ideal(Ring ring) : ring_(std::move(ring)) { check_polynomial_ring(ring_); }

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw RingMismatch();
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)) {}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const { return normal_form(f, elements_, order_); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(leading_term(g, order_).mono);
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (!(f.ring() == g.ring())) throw RingMismatch();
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of the zero polynomial");
  if (f.has_negative_exponents() || g.has_negative_exponents()) {
    throw DomainError("S-polynomial needs polynomials without negative exponents");
  }
  return from_sorted(f.ring(), s_poly_sorted(to_sorted(f, order), to_sorted(g, order), order));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  std::vector<SortedPoly> divisors;
  divisors.reserve(basis.size());
  for (const auto& b : basis) {
    if (!(b.ring() == f.ring())) throw RingMismatch();
    if (b.is_zero()) throw DomainError("zero divisor in normal_form");
    if (b.has_negative_exponents()) throw DomainError("normal_form needs polynomial divisors");
    divisors.push_back(to_sorted(b, order));
  }
  return from_sorted(f.ring(), reduce_sorted(to_sorted(f, order), divisors, order));
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  const Ring& ring = ideal.ring();
  if (order.nvars() != ring.nvars()) throw DomainError("order/ring size mismatch");
  std::vector<SortedPoly> gens;
  for (const auto& g : ideal.generators()) {
    if (g.is_constant()) {
      return GroebnerBasis(ring, order, {Polynomial::constant(ring, 1)});
    }
    gens.push_back(to_sorted(g, order));
  }
  std::vector<SortedPoly> basis = BuchbergerRun(order).run(std::move(gens));
  basis = reduce_basis(std::move(basis), order);
  std::vector<Polynomial> elements;
  elements.reserve(basis.size());
  for (auto& g : basis) elements.push_back(from_sorted(ring, std::move(g)));
  return GroebnerBasis(ring, order, std::move(elements));
}

bool contains_one(const GroebnerBasis& basis) {
  return basis.size() == 1 && basis.elements()[0].is_constant();
}

DimensionResult ideal_dimension(const GroebnerBasis& basis) {
  const std::size_t n = basis.ring().nvars();
  if (n > kMaxDimensionVars) {
    throw DomainError("ideal_dimension supports at most " + std::to_string(kMaxDimensionVars) +
                      " variables");
  }
  DimensionResult result;
  if (contains_one(basis)) return result;
  std::vector<std::uint32_t> supports;
  for (const auto& m : basis.leading_monomials()) supports.push_back(m.support());
  int best_size = -1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best_size) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent) {
      best_size = size;
      best_mask = mask;
    }
  }
  result.dim = best_size;
  result.codim = static_cast<int>(n) - best_size;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_mask & (1u << i)) result.independent_set.push_back(i);
  }
  return result;
}

DimensionResult ideal_dimension(const GroebnerBasis& basis, const Ring& ring) {
  if (!(basis.ring() == ring)) throw RingMismatch();
  return ideal_dimension(basis);
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  std::vector<bool> dropped(n, false);
  for (std::size_t v : drop) {
    if (v >= n) throw DomainError("eliminated variable out of range");
    dropped[v] = true;
  }
  const auto count = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), true));
  if (count == n) throw DomainError("cannot eliminate every variable");
  if (count == 0) return Ideal(ring, buchberger(ideal, MonomialOrder::grevlex(n)).elements());

  std::vector<std::size_t> priority;
  std::uint32_t drop_mask = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (dropped[v]) {
      priority.push_back(v);
      drop_mask |= 1u << v;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!dropped[v]) priority.push_back(v);
  }
  const GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(priority, count));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if ((g.support() & drop_mask) == 0) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  const Ring& ring = ideal.ring();
  if (!(f.ring() == ring)) throw RingMismatch();
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  const Ring extended = ring.with_extra_variable("t");
  const std::size_t t = ring.nvars();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embedded(extended));
  gens.push_back(Polynomial::constant(extended, 1) -
                 Polynomial::variable(extended, t) * f.embedded(extended));
  const std::size_t drop[] = {t};
  const Ideal eliminated = eliminate(Ideal(extended, std::move(gens)), drop);
  std::vector<Polynomial> back;
  for (const auto& g : eliminated.generators()) back.push_back(g.projected(ring));
  return Ideal(ring, std::move(back));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
  const auto order = MonomialOrder::grevlex(a.ring().nvars());
  const GroebnerBasis ga = buchberger(a, order);
  const GroebnerBasis gb = buchberger(b, order);
  const auto all_in = [](const std::vector<Polynomial>& gens, const GroebnerBasis& basis) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const Polynomial& g) { return basis.contains(g); });
  };
  return all_in(a.generators(), gb) && all_in(b.generators(), ga);
}

}  // namespace polyctrl
