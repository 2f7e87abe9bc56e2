#pragma once

// Shared helpers for the test suites: random generators and independent
// reference implementations used as oracles.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "polyctrl/controllability.hpp"
#include "polyctrl/groebner.hpp"
#include "polyctrl/linalg.hpp"
#include "polyctrl/monomial_order.hpp"
#include "polyctrl/parser.hpp"
#include "polyctrl/polymatrix.hpp"
#include "polyctrl/polynomial.hpp"

namespace polyctrl::testing {

inline Polynomial P(const std::string& text, const Ring& ring) { return parse_polynomial(text, ring); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }

  Monomial monomial(std::size_t n, int max_degree) {
    Monomial m(n);
    int left = static_cast<int>(uniform(0, max_degree));
    for (std::size_t v = 0; v < n && left > 0; ++v) {
      const int e = static_cast<int>(uniform(0, left));
      m.set(v, e);
      left -= e;
    }
    // Shuffle so the first variable is not favoured.
    std::vector<int> e(n);
    for (std::size_t v = 0; v < n; ++v) e[v] = m[v];
    std::shuffle(e.begin(), e.end(), gen_);
    return Monomial::from_span(e);
  }

  Polynomial polynomial(const Ring& ring, int max_degree, std::size_t max_terms, long coeff = 5) {
    std::vector<Term> terms;
    const std::size_t count = static_cast<std::size_t>(uniform(0, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < count; ++i) {
      long c = 0;
      while (c == 0) c = uniform(-coeff, coeff);
      terms.push_back({monomial(ring.nvars(), max_degree), Rational(c)});
    }
    return Polynomial(ring, std::move(terms));
  }

  Polynomial nonzero_polynomial(const Ring& ring, int max_degree, std::size_t max_terms,
                                long coeff = 5) {
    for (;;) {
      Polynomial p = polynomial(ring, max_degree, max_terms, coeff);
      if (!p.is_zero()) return p;
    }
  }

  Rational rational(long bound) {
    const long num = uniform(-bound, bound);
    const long den = uniform(1, bound);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Cofactor expansion along the first row.
inline Polynomial laplace_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Polynomial acc(m.ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c) cols.push_back(j);
    }
    Polynomial term = m(0, c) * laplace_determinant(m.submatrix(rows, cols));
    if (c % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

/// Rank by plain Gaussian elimination on a copy, without the library's
/// echelon routine.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rows;
}

inline std::size_t dense_nullity(const RationalMatrix& m) {
  return m.cols() - dense_rank(to_rows(m));
}

/// A random full-row-rank matrix (checked through the Laplace oracle on some
/// maximal minor).
inline PolyMatrix random_full_rank(Rng& rng, const Ring& ring, std::size_t l, std::size_t k,
                                   int degree, std::size_t max_terms) {
  for (;;) {
    PolyMatrix m(ring, l, k);
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < k; ++j) m.set(i, j, rng.polynomial(ring, degree, max_terms, 4));
    }
    std::vector<std::size_t> rows(l);
    for (std::size_t i = 0; i < l; ++i) rows[i] = i;
    for (const auto& cols : subsets(k, l)) {
      if (!laplace_determinant(m.submatrix(rows, cols)).is_zero()) return m;
    }
  }
}

/// Rows of a random integer matrix with entries in [lo, hi].
inline RationalMatrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo,
                                             long hi) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
  }
  return m;
}

/// Applies one random module-preserving row operation.
inline void random_row_operation(Rng& rng, PolyMatrix& m) {
  const std::size_t l = m.rows();
  const long kind = l < 2 ? 1 : rng.uniform(0, 2);
  if (kind == 0) {
    const std::size_t a = rng.index(l);
    std::size_t b = rng.index(l - 1);
    if (b >= a) ++b;
    m.swap_rows(a, b);
  } else if (kind == 1) {
    Rational c = 0;
    while (c == 0) c = rng.rational(5);
    m.scale_row(rng.index(l), c);
  } else {
    const std::size_t target = rng.index(l);
    std::size_t source = rng.index(l - 1);
    if (source >= target) ++source;
    m.add_row_multiple(target, source, rng.polynomial(m.ring(), 1, 2, 3));
  }
}

/// Every pairwise S-polynomial reduces to zero.
inline bool s_pairs_vanish(const GroebnerBasis& gb) {
  const auto& g = gb.elements();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j], gb.order()), g, gb.order()).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace polyctrl::testing
