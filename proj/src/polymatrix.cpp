#include "polyctrl/polymatrix.hpp"

#include <algorithm>

#include "polyctrl/errors.hpp"
#include "polyctrl/parser.hpp"

namespace polyctrl {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {
  if (rows == 0 || cols == 0) throw SchemaError("matrix must have at least one row and column");
}

PolyMatrix::PolyMatrix(Ring ring, std::vector<std::vector<Polynomial>> rows)
    : ring_(std::move(ring)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  if (rows_ == 0 || cols_ == 0) throw SchemaError("matrix must have at least one row and column");
  entries_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw SchemaError("ragged matrix rows");
    for (auto& p : row) {
      if (!(p.ring() == ring_)) throw RingMismatch();
      entries_.push_back(std::move(p));
    }
  }
}

PolyMatrix PolyMatrix::parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> parsed;
  for (const auto& row : rows) {
    std::vector<Polynomial> out;
    for (const auto& text : row) out.push_back(parse_polynomial(text, ring));
    parsed.push_back(std::move(out));
  }
  return PolyMatrix(ring, std::move(parsed));
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (!(p.ring() == ring_)) throw RingMismatch();
  entries_.at(r * cols_ + c) = std::move(p);
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.entries_[i * cols.size() + j] = (*this)(rows[i], cols[j]);
  }
  return out;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < cols_; ++j) std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
}

void PolyMatrix::scale_row(std::size_t r, const Rational& c) {
  if (c == 0) throw DomainError("row scaling by zero");
  for (std::size_t j = 0; j < cols_; ++j) entries_[r * cols_ + j] = entries_[r * cols_ + j].scaled(c);
}

void PolyMatrix::add_row_multiple(std::size_t target, std::size_t source, const Polynomial& factor) {
  if (target == source) throw DomainError("row operation needs two distinct rows");
  for (std::size_t j = 0; j < cols_; ++j) {
    entries_[target * cols_ + j] += factor * entries_[source * cols_ + j];
  }
}

PolyMatrix PolyMatrix::rebased(const Ring& ring) const {
  PolyMatrix out(ring, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].rebased(ring);
  return out;
}

PolyMatrix PolyMatrix::permuted_variables(std::span<const std::size_t> perm) const {
  const Ring ring = ring_.permuted(perm);
  PolyMatrix out(ring, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].permuted(ring, perm);
  return out;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const Ring& ring = m.ring();
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  }
  bool negate = false;
  Polynomial previous = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial(ring);
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial cross = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = previous.is_constant() ? cross.scaled(1 / previous.terms()[0].coeff)
                                         : divide_exact(cross, previous);
      }
    }
    previous = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

PolyMatrix clear_laurent_rows(const PolyMatrix& m) {
  const Ring plain = m.ring().with_laurent(false);
  if (!m.ring().laurent()) return m;
  const std::size_t n = m.ring().nvars();
  PolyMatrix out(plain, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool any = false;
    Monomial unit(n);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& t : m(i, j).terms()) {
        for (std::size_t v = 0; v < n; ++v) {
          unit.set(v, any ? std::min(unit[v], t.mono[v]) : t.mono[v]);
        }
        any = true;
      }
    }
    const Monomial inverse = unit.inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.set(i, j, m(i, j).shifted(inverse).rebased(plain));
    }
  }
  return out;
}

MinorIdeal minors(const PolyMatrix& m, std::size_t r) {
  if (r == 0 || r > std::min(m.rows(), m.cols())) throw DomainError("minor size out of range");
  const PolyMatrix plain = clear_laurent_rows(m);
  MinorIdeal result{r, {}, Ideal(plain.ring())};
  std::vector<Polynomial> nonzero;
  const auto row_sets = subsets(plain.rows(), r);
  const auto col_sets = subsets(plain.cols(), r);
  for (const auto& rows : row_sets) {
    for (const auto& cols : col_sets) {
      Polynomial minor = r == 1 ? plain(rows[0], cols[0]) : determinant(plain.submatrix(rows, cols));
      if (!minor.is_zero()) nonzero.push_back(minor);
      result.minors.push_back(std::move(minor));
    }
  }
  result.ideal = Ideal(plain.ring(), std::move(nonzero));
  return result;
}

std::size_t symbolic_rank(const PolyMatrix& m) {
  const PolyMatrix plain = clear_laurent_rows(m);
  const Ring& ring = plain.ring();
  const std::size_t rows = plain.rows();
  const std::size_t cols = plain.cols();
  std::vector<std::vector<Polynomial>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i].push_back(plain(i, j));
  }
  Polynomial previous = Polynomial::constant(ring, 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial cross = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        a[i][j] = previous.is_constant() ? cross.scaled(1 / previous.terms()[0].coeff)
                                         : divide_exact(cross, previous);
      }
      a[i][c] = Polynomial(ring);
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

PolyMatrix hautus_matrix(const RationalMatrix& x, const RationalMatrix& u) {
  const std::size_t n = x.rows();
  if (n == 0 || x.cols() != n) throw DomainError("state matrix must be square and nonempty");
  if (u.rows() != n && !(u.rows() == 0 && u.cols() == 0)) {
    throw DomainError("input matrix row count must match the state dimension");
  }
  const std::size_t m = u.rows() == 0 ? 0 : u.cols();
  const Ring ring({"s"});
  const Polynomial s = Polynomial::variable(ring, 0);
  PolyMatrix out(ring, n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial entry = Polynomial::constant(ring, -x(i, j));
      if (i == j) entry += s;
      out.set(i, j, std::move(entry));
    }
    for (std::size_t j = 0; j < m; ++j) out.set(i, n + j, Polynomial::constant(ring, -u(i, j)));
  }
  return out;
}

}  // namespace polyctrl
