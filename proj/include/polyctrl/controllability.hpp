#pragma once

#include <optional>
#include <string>

#include "polyctrl/ext_int.hpp"
#include "polyctrl/groebner.hpp"
#include "polyctrl/linalg.hpp"
#include "polyctrl/polymatrix.hpp"

namespace polyctrl {

enum class Status { Controllable, Uncontrollable, Indeterminate };

std::string to_string(Status status);

/// Reason codes carried by a Verdict.
namespace reason {
inline constexpr const char* kCodimGe2 = "codim_ge_2";
inline constexpr const char* kCodimLt2 = "codim_lt_2";
inline constexpr const char* kZeroModule = "zero_module";
inline constexpr const char* kRankDeficient = "rank_deficient";
inline constexpr const char* kGcdConstant = "gcd_constant";
inline constexpr const char* kGcdNonconstant = "gcd_nonconstant";
}  // namespace reason

/// Outcome of a controllability decision with the evidence used.
struct Verdict {
  Status status = Status::Indeterminate;
  std::optional<ExtInt> codim;  ///< set for Controllable / Uncontrollable
  std::string reason;
  std::size_t rank = 0;
  /// Maximal-minor ideal (absent for the zero module and rank-deficient input).
  std::optional<MinorIdeal> minors;
  /// Basis of the ideal whose dimension was measured (saturated for Laurent rings).
  std::optional<GroebnerBasis> basis;
  std::optional<DimensionResult> dimension;
};

/// Decides controllability of the system whose laws are the rows of m.
///
/// Zero matrix: controllable (the quotient module is free). Full row rank:
/// controllable iff the variety of the maximal minors has codimension >= 2,
/// measured in the torus for Laurent rings. Otherwise indeterminate.
Verdict decide(const PolyMatrix& m);

/// Univariate specialization: controllable iff the maximal minors have a
/// unit gcd (a nonzero constant, or a monomial for Laurent rings).
Verdict decide_1d(const PolyMatrix& m);

/// Kalman test: rank [U, XU, ..., X^(n-1) U] == n.
bool kalman_rank(const RationalMatrix& x, const RationalMatrix& u);

struct CrossCheck {
  Verdict verdict;
  bool kalman = false;
  bool agree = false;
};

/// Runs decide on [sI - X, -U] and the Kalman rank test side by side.
CrossCheck cross_check_state_space(const RationalMatrix& x, const RationalMatrix& u);

}  // namespace polyctrl
