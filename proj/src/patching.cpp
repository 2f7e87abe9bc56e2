#include "polyctrl/patching.hpp"

#include <algorithm>
#include <set>

#include "polyctrl/errors.hpp"

namespace polyctrl {
namespace {

constexpr std::size_t kMaxUnknowns = 4096;

struct Stencil {
  std::vector<long> lo;
  std::vector<long> hi;
  bool empty = true;
};

Stencil row_stencil(const PolyMatrix& system, std::size_t row) {
  const std::size_t n = system.ring().nvars();
  Stencil s{std::vector<long>(n, 0), std::vector<long>(n, 0), true};
  for (std::size_t j = 0; j < system.cols(); ++j) {
    for (const auto& t : system(row, j).terms()) {
      for (std::size_t v = 0; v < n; ++v) {
        s.lo[v] = s.empty ? t.mono[v] : std::min<long>(s.lo[v], t.mono[v]);
        s.hi[v] = s.empty ? t.mono[v] : std::max<long>(s.hi[v], t.mono[v]);
      }
      s.empty = false;
    }
  }
  return s;
}

void check_shapes(const PolyMatrix& system, const Window& window) {
  if (system.ring().nvars() != window.dims()) {
    throw DomainError("window dimension must equal the number of shift variables");
  }
  if (window.cell_count() * system.cols() > kMaxUnknowns) {
    throw DomainError("window too large (more than " + std::to_string(kMaxUnknowns) +
                      " unknowns)");
  }
}

void check_region(const Region& region, const Window& window, std::size_t k, const char* name) {
  if (region.values.size() != region.cells.size()) {
    throw DomainError(std::string(name) + ": one value vector per cell is required");
  }
  std::set<Cell> seen;
  for (std::size_t i = 0; i < region.cells.size(); ++i) {
    if (!window.contains(region.cells[i])) {
      throw DomainError(std::string(name) + ": cell outside the window");
    }
    if (!seen.insert(region.cells[i]).second) {
      throw DomainError(std::string(name) + ": duplicate cell");
    }
    if (region.values[i].size() != k) {
      throw DomainError(std::string(name) + ": value vector length must equal the column count");
    }
  }
}

// Window equations stacked with "unknown = value" rows for each region.
std::pair<RationalMatrix, std::vector<Rational>> constrained_system(
    const RationalMatrix& equations, const Window& window, std::size_t k,
    std::initializer_list<const Region*> regions) {
  std::size_t fixed = 0;
  for (const Region* r : regions) fixed += r->cells.size() * k;
  RationalMatrix a(equations.rows() + fixed, equations.cols());
  std::vector<Rational> rhs(a.rows());
  for (std::size_t i = 0; i < equations.rows(); ++i) {
    for (std::size_t j = 0; j < equations.cols(); ++j) a(i, j) = equations(i, j);
  }
  std::size_t row = equations.rows();
  for (const Region* r : regions) {
    for (std::size_t c = 0; c < r->cells.size(); ++c) {
      const std::size_t base = window.index(r->cells[c]) * k;
      for (std::size_t j = 0; j < k; ++j) {
        a(row, base + j) = 1;
        rhs[row] = r->values[c][j];
        ++row;
      }
    }
  }
  return {std::move(a), std::move(rhs)};
}

}  // namespace

Window::Window(std::vector<std::size_t> extents) : extents_(std::move(extents)) {
  if (extents_.empty()) throw DomainError("window needs at least one dimension");
  for (std::size_t e : extents_) {
    if (e == 0) throw DomainError("window extents must be positive");
    if (e > kMaxUnknowns) throw DomainError("window extent too large");
  }
  if (cell_count() > kMaxUnknowns) throw DomainError("window has too many cells");
}

std::size_t Window::cell_count() const {
  std::size_t count = 1;
  for (std::size_t e : extents_) {
    count *= e;
    if (count > kMaxUnknowns * kMaxUnknowns) break;
  }
  return count;
}

bool Window::contains(std::span<const long> cell) const {
  if (cell.size() != extents_.size()) return false;
  for (std::size_t v = 0; v < cell.size(); ++v) {
    if (cell[v] < 0 || cell[v] >= static_cast<long>(extents_[v])) return false;
  }
  return true;
}

std::size_t Window::index(std::span<const long> cell) const {
  if (!contains(cell)) throw DomainError("cell outside the window");
  std::size_t idx = 0;
  for (std::size_t v = 0; v < cell.size(); ++v) idx = idx * extents_[v] + static_cast<std::size_t>(cell[v]);
  return idx;
}

Cell Window::cell(std::size_t index) const {
  Cell c(extents_.size());
  for (std::size_t v = extents_.size(); v-- > 0;) {
    c[v] = static_cast<long>(index % extents_[v]);
    index /= extents_[v];
  }
  return c;
}

RationalMatrix window_equations(const PolyMatrix& system, const Window& window) {
  check_shapes(system, window);
  const std::size_t n = window.dims();
  const std::size_t k = system.cols();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < system.rows(); ++i) {
    const Stencil st = row_stencil(system, i);
    if (st.empty) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (st.hi[v] - st.lo[v] >= static_cast<long>(window.extents()[v])) {
        throw DomainError("window smaller than the stencil of law " + std::to_string(i));
      }
    }
    for (std::size_t p = 0; p < window.cell_count(); ++p) {
      const Cell at = window.cell(p);
      bool fits = true;
      for (std::size_t v = 0; v < n && fits; ++v) {
        fits = at[v] + st.lo[v] >= 0 && at[v] + st.hi[v] < static_cast<long>(window.extents()[v]);
      }
      if (!fits) continue;
      std::vector<Rational> eq(window.cell_count() * k);
      for (std::size_t j = 0; j < k; ++j) {
        for (const auto& t : system(i, j).terms()) {
          Cell shifted = at;
          for (std::size_t v = 0; v < n; ++v) shifted[v] += t.mono[v];
          eq[window.index(shifted) * k + j] += t.coeff;
        }
      }
      rows.push_back(std::move(eq));
    }
  }
  if (rows.empty()) return RationalMatrix(0, window.cell_count() * k);
  return RationalMatrix::from_rows(rows);
}

KernelBasis kernel_basis(const PolyMatrix& system, const Window& window) {
  const RationalMatrix eqs = window_equations(system, window);
  KernelBasis kb;
  kb.components = system.cols();
  kb.equations = eqs.rows();
  if (eqs.rows() == 0) {
    for (std::size_t i = 0; i < eqs.cols(); ++i) {
      std::vector<Rational> e(eqs.cols());
      e[i] = 1;
      kb.basis.push_back(std::move(e));
    }
    return kb;
  }
  kb.basis = nullspace(eqs);
  return kb;
}

std::vector<Cell> dilate(const std::vector<Cell>& cells, const Window& window, std::size_t radius) {
  std::set<Cell> out;
  const std::size_t n = window.dims();
  const long r = static_cast<long>(radius);
  for (const auto& c : cells) {
    Cell offset(n, -r);
    for (;;) {
      Cell probe = c;
      for (std::size_t v = 0; v < n; ++v) probe[v] += offset[v];
      if (window.contains(probe)) out.insert(probe);
      std::size_t v = 0;
      while (v < n && offset[v] == r) offset[v++] = -r;
      if (v == n) break;
      ++offset[v];
    }
  }
  return {out.begin(), out.end()};
}

PatchResult patch_feasible(const PolyMatrix& system, const PatchProblem& problem) {
  const Window& window = problem.window;
  const std::size_t k = system.cols();
  check_shapes(system, window);
  check_region(problem.region1, window, k, "region1");
  check_region(problem.region2, window, k, "region2");
  if (!problem.region1.empty() && !problem.region2.empty()) {
    const auto n1 = dilate(problem.region1.cells, window, problem.margin);
    const auto n2 = dilate(problem.region2.cells, window, problem.margin);
    std::vector<Cell> common;
    std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::back_inserter(common));
    if (!common.empty()) throw DomainError("region neighbourhoods overlap");
  }
  const RationalMatrix eqs = window_equations(system, window);
  for (const Region* r : {&problem.region1, &problem.region2}) {
    if (r->empty()) continue;
    auto [a, rhs] = constrained_system(eqs, window, k, {r});
    if (!solve(a, rhs)) {
      throw DomainError("prescribed values are not the restriction of a window trajectory");
    }
  }
  auto [a, rhs] = constrained_system(eqs, window, k, {&problem.region1, &problem.region2});
  PatchResult result;
  result.witness = solve(a, rhs);
  result.feasible = result.witness.has_value();
  return result;
}

bool satisfies(const PolyMatrix& system, const PatchProblem& problem,
               std::span<const Rational> trajectory) {
  const RationalMatrix eqs = window_equations(system, problem.window);
  if (trajectory.size() != eqs.cols()) return false;
  for (std::size_t i = 0; i < eqs.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < eqs.cols(); ++j) acc += eqs(i, j) * trajectory[j];
    if (acc != 0) return false;
  }
  const std::size_t k = system.cols();
  for (const Region* r : {&problem.region1, &problem.region2}) {
    for (std::size_t c = 0; c < r->cells.size(); ++c) {
      const std::size_t base = problem.window.index(r->cells[c]) * k;
      for (std::size_t j = 0; j < k; ++j) {
        if (trajectory[base + j] != r->values[c][j]) return false;
      }
    }
  }
  return true;
}

EvidenceReport evidence_report(const PolyMatrix& system, std::span<const PatchProblem> suite) {
  static const std::string kArtifact = "window artifact - enlarge window";
  EvidenceReport report;
  report.verdict = decide(system);
  for (const auto& problem : suite) {
    EvidenceEntry entry;
    try {
      entry.result = patch_feasible(system, problem);
      ++(entry.result->feasible ? report.feasible : report.infeasible);
    } catch (const Error& e) {
      entry.error = e.what();
      entry.label = "invalid";
    }
    report.entries.push_back(std::move(entry));
  }
  const Status status = report.verdict.status;
  const std::size_t tested = report.feasible + report.infeasible;
  if (tested == 0) {
    report.no_evidence = true;
    report.summary = "no evidence";
    return report;
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    auto& entry = report.entries[i];
    if (!entry.result) continue;
    const bool feasible = entry.result->feasible;
    bool agrees = true;
    if (status == Status::Controllable) agrees = feasible;
    entry.label = agrees ? "agrees" : kArtifact;
    if (!agrees) {
      report.discrepancies.push_back("problem " + std::to_string(i) +
                                     ": infeasible patch for a controllable system (" + kArtifact +
                                     ")");
    }
  }
  if (status == Status::Uncontrollable && report.infeasible == 0) {
    report.discrepancies.push_back("no infeasible patch found for an uncontrollable system (" +
                                   kArtifact + ")");
  }
  report.consistent = report.discrepancies.empty();
  if (status == Status::Indeterminate) {
    report.summary = "no symbolic verdict; patching results listed only";
  } else {
    report.summary = report.consistent ? "consistent" : "inconsistent: " + kArtifact;
  }
  return report;
}

}  // namespace polyctrl
