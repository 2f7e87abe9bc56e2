#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyctrl/controllability.hpp"
#include "polyctrl/linalg.hpp"
#include "polyctrl/polymatrix.hpp"

namespace polyctrl {

using Cell = std::vector<long>;

/// Finite box {0..e1-1} x ... x {0..en-1} of the lattice Z^n.
class Window {
 public:
  explicit Window(std::vector<std::size_t> extents);

  std::size_t dims() const { return extents_.size(); }
  const std::vector<std::size_t>& extents() const { return extents_; }
  std::size_t cell_count() const;
  bool contains(std::span<const long> cell) const;
  /// Row-major index, last coordinate fastest.
  std::size_t index(std::span<const long> cell) const;
  Cell cell(std::size_t index) const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<std::size_t> extents_;
};

/// Prescribed values on some window cells; values[i] has one entry per
/// signal component.
struct Region {
  std::vector<Cell> cells;
  std::vector<std::vector<Rational>> values;
  bool empty() const { return cells.empty(); }
};

struct PatchProblem {
  Window window;
  Region region1;
  Region region2;
  /// Chebyshev radius of the neighbourhoods that must stay disjoint.
  std::size_t margin = 1;
};

/// Trajectories on a window: unknown w_j(p) sits at index(p) * k + j.
struct KernelBasis {
  std::size_t components = 0;
  std::size_t equations = 0;
  std::vector<std::vector<Rational>> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// One row per (law, lattice point) pair whose shifted stencil lies inside
/// the window. Throws DomainError when some law fits nowhere.
RationalMatrix window_equations(const PolyMatrix& system, const Window& window);

KernelBasis kernel_basis(const PolyMatrix& system, const Window& window);

struct PatchResult {
  bool feasible = false;
  std::optional<std::vector<Rational>> witness;
};

/// Is there a window trajectory matching region1's values and region2's
/// values at once? A negative answer is evidence only: the patch may need
/// room outside the window.
PatchResult patch_feasible(const PolyMatrix& system, const PatchProblem& problem);

/// Cells within Chebyshev distance `radius` of the region, clipped to the window.
std::vector<Cell> dilate(const std::vector<Cell>& cells, const Window& window, std::size_t radius);

/// Checks a candidate trajectory against every window equation and both regions.
bool satisfies(const PolyMatrix& system, const PatchProblem& problem,
               std::span<const Rational> trajectory);

struct EvidenceEntry {
  std::optional<PatchResult> result;
  std::string error;  ///< set when the problem itself was invalid
  std::string label;  ///< "agrees", "window artifact - enlarge window", "invalid"
};

struct EvidenceReport {
  Verdict verdict;
  std::vector<EvidenceEntry> entries;
  bool consistent = true;
  bool no_evidence = false;
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::vector<std::string> discrepancies;
  std::string summary;
};

/// Compares the symbolic verdict with patching experiments: uncontrollable
/// with an infeasible patch, or controllable with every patch feasible, is
/// consistent. Disagreements are reported as window artifacts.
EvidenceReport evidence_report(const PolyMatrix& system, std::span<const PatchProblem> suite);

}  // namespace polyctrl
