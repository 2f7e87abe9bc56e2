#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyctrl/groebner.hpp"
#include "polyctrl/linalg.hpp"
#include "polyctrl/polynomial.hpp"

namespace polyctrl {

/// rows x cols matrix of polynomials over one ring; the rows generate the
/// law module of a system.
class PolyMatrix {
 public:
  /// Zero matrix.
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Throws SchemaError for ragged/empty input, RingMismatch for foreign entries.
  PolyMatrix(Ring ring, std::vector<std::vector<Polynomial>> rows);
  static PolyMatrix parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial p);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

  // Row operations. Each preserves the row module.
  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, const Rational& c);
  void add_row_multiple(std::size_t target, std::size_t source, const Polynomial& factor);

  /// Same entries read in another ring with the same variables.
  PolyMatrix rebased(const Ring& ring) const;
  /// New variable i is old variable perm[i].
  PolyMatrix permuted_variables(std::span<const std::size_t> perm) const;

  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

struct MinorIdeal {
  std::size_t size = 0;
  /// One entry per (row subset, column subset) pair in lexicographic order,
  /// zeros included.
  std::vector<Polynomial> minors;
  /// Generated by the nonzero minors.
  Ideal ideal;
};

/// Fraction-free (Bareiss) elimination with exact polynomial division.
Polynomial determinant(const PolyMatrix& m);

/// All r x r minors. Laurent matrices are first brought to polynomial form
/// row by row (see clear_laurent_rows); the result lives in the
/// corresponding non-Laurent ring.
MinorIdeal minors(const PolyMatrix& m, std::size_t r);

/// Rank over the fraction field.
std::size_t symbolic_rank(const PolyMatrix& m);

/// Multiplies each row by the monomial unit that clears its negative
/// exponents and strips common monomial factors. Row scaling by units of
/// the Laurent ring keeps the row module. The result uses the non-Laurent
/// version of the ring.
PolyMatrix clear_laurent_rows(const PolyMatrix& m);

/// [sI - X, -U] over Q[s].
PolyMatrix hautus_matrix(const RationalMatrix& x, const RationalMatrix& u);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace polyctrl
