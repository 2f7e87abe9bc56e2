#include "polyctrl/controllability.hpp"

#include "polyctrl/errors.hpp"

namespace polyctrl {

std::string to_string(Status status) {
  switch (status) {
    case Status::Controllable:
      return "controllable";
    case Status::Uncontrollable:
      return "uncontrollable";
    case Status::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

Verdict decide(const PolyMatrix& m) {
  Verdict v;
  if (m.is_zero()) {
    // No laws at all: the empty set of maximal minors generates (1).
    v.status = Status::Controllable;
    v.codim = ExtInt::infinity();
    v.reason = reason::kZeroModule;
    return v;
  }
  v.rank = symbolic_rank(m);
  if (v.rank < m.rows()) {
    v.status = Status::Indeterminate;
    v.reason = reason::kRankDeficient;
    return v;
  }
  MinorIdeal mi = minors(m, m.rows());
  const Ring& ring = mi.ideal.ring();
  const std::size_t n = ring.nvars();
  Ideal measured = mi.ideal;
  if (m.ring().laurent()) {
    Polynomial torus = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < n; ++i) torus *= Polynomial::variable(ring, i);
    measured = saturate(measured, torus);
  }
  GroebnerBasis gb = buchberger(measured, MonomialOrder::grevlex(n));
  DimensionResult dim = ideal_dimension(gb);
  v.codim = dim.codim;
  if (dim.codim >= ExtInt(2)) {
    v.status = Status::Controllable;
    v.reason = reason::kCodimGe2;
  } else {
    v.status = Status::Uncontrollable;
    v.reason = reason::kCodimLt2;
  }
  v.minors = std::move(mi);
  v.basis = std::move(gb);
  v.dimension = std::move(dim);
  return v;
}

Verdict decide_1d(const PolyMatrix& m) {
  if (m.ring().nvars() != 1) throw DomainError("decide_1d needs a univariate ring");
  Verdict v;
  v.rank = symbolic_rank(m);
  if (v.rank < m.rows()) throw DomainError("decide_1d needs a full row rank matrix");
  MinorIdeal mi = minors(m, m.rows());
  const Ring& ring = mi.ideal.ring();
  Polynomial g(ring);
  for (const auto& minor : mi.ideal.generators()) g = gcd_univariate(g, minor);
  if (m.ring().laurent()) {
    // Powers of the shift are units.
    const Polynomial s = Polynomial::variable(ring, 0);
    while (g.degree() > 0 && g.coefficient(Monomial{0}) == 0) g = divide_exact(g, s);
  }
  const bool unit = g.is_constant();
  v.status = unit ? Status::Controllable : Status::Uncontrollable;
  v.reason = unit ? reason::kGcdConstant : reason::kGcdNonconstant;
  // A nonconstant gcd cuts out finitely many points of the line.
  v.codim = unit ? ExtInt::infinity() : ExtInt(1);
  v.minors = std::move(mi);
  return v;
}

bool kalman_rank(const RationalMatrix& x, const RationalMatrix& u) {
  const std::size_t n = x.rows();
  if (n == 0 || x.cols() != n) throw DomainError("state matrix must be square and nonempty");
  if (u.rows() != n && !(u.rows() == 0 && u.cols() == 0)) {
    throw DomainError("input matrix row count must match the state dimension");
  }
  if (u.cols() == 0) return false;
  RationalMatrix block = u;
  RationalMatrix power = u;
  for (std::size_t i = 1; i < n; ++i) {
    power = x * power;
    block = block.hconcat(power);
  }
  return rank(block) == n;
}

CrossCheck cross_check_state_space(const RationalMatrix& x, const RationalMatrix& u) {
  CrossCheck out;
  out.verdict = decide(hautus_matrix(x, u));
  out.kalman = kalman_rank(x, u);
  out.agree = (out.verdict.status == Status::Controllable) == out.kalman;
  return out;
}

}  // namespace polyctrl
