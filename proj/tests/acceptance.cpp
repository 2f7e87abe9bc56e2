// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "polyctrl/genericity.hpp"
#include "polyctrl/patching.hpp"
#include "support.hpp"

using namespace polyctrl;
using polyctrl::testing::Rng;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome kalman_hautus() {
  Rng rng(1001);
  const auto start = Clock::now();
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t l = 1 + rng.index(4);
    const std::size_t m = 1 + rng.index(2);
    const CrossCheck cc = cross_check_state_space(
        polyctrl::testing::random_rational_matrix(rng, l, l, -3, 3),
        polyctrl::testing::random_rational_matrix(rng, l, m, -3, 3));
    agree += cc.agree;
  }
  const double secs = seconds_since(start);
  return {agree == 200 && secs < 60.0, fmt("%d/200 agree, %.2f s", agree, secs)};
}

Outcome canonical_instances() {
  const Ring r3 = Ring::standard(3);
  const Ring x({"x"});
  const Verdict div = decide(PolyMatrix::parse(r3, {{"x1", "x2", "x3"}}));
  const Verdict one = decide(PolyMatrix::parse(r3, {{"x1"}}));
  const Verdict pair = decide(PolyMatrix::parse(x, {{"x", "x + 1"}}));
  const Verdict curl = decide(
      PolyMatrix::parse(r3, {{"0", "-x3", "x2"}, {"x3", "0", "-x1"}, {"-x2", "x1", "0"}}));
  const bool ok = div.status == Status::Controllable && div.codim == ExtInt(3) &&
                  one.status == Status::Uncontrollable && one.codim == ExtInt(1) &&
                  pair.status == Status::Controllable && pair.codim == ExtInt::infinity() &&
                  curl.status == Status::Indeterminate && curl.rank == 2;
  auto show = [](const Verdict& v) {
    return to_string(v.status) + "/" + (v.codim ? v.codim->to_string() : "-");
  };
  return {ok, "divergence " + show(div) + ", [x1] " + show(one) + ", [x, x+1] " + show(pair) +
                  ", curl " + show(curl) + " rank " + std::to_string(curl.rank)};
}

SampleConfig underdetermined() {
  SampleConfig cfg;
  cfg.l = 1;
  cfg.k = 2;
  cfg.n = 2;
  cfg.d = 2;
  cfg.coeff_bound = 9;
  cfg.trials = 500;
  cfg.seed = 42;
  cfg.threads = 0;
  return cfg;
}

Outcome genericity_underdetermined() {
  const auto start = Clock::now();
  const ExperimentRecord r = run_experiment(underdetermined());
  const double secs = seconds_since(start);
  const double fraction = static_cast<double>(r.controllable) / 500.0;
  return {fraction >= 0.95 && secs < 600.0,
          fmt("controllable %zu/500 (%.3f), %.2f s", r.controllable, fraction, secs)};
}

Outcome genericity_square() {
  SampleConfig cfg = underdetermined();
  cfg.l = 2;
  const ExperimentRecord r = run_experiment(cfg);
  const double fraction = static_cast<double>(r.uncontrollable) / 500.0;
  const auto at1 = r.codim_histogram.find(ExtInt(1));
  const double mass = at1 == r.codim_histogram.end() ? 0.0 : static_cast<double>(at1->second) / 500.0;
  return {fraction >= 0.95 && mass >= 0.95,
          fmt("uncontrollable %.3f, codim-1 mass %.3f, histogram %s", fraction, mass,
              histogram_json(r.codim_histogram).c_str())};
}

Outcome complete_intersection() {
  CiConfig cfg;
  cfg.m = 2;
  cfg.n = 2;
  cfg.d = 2;
  cfg.trials = 200;
  cfg.threads = 0;
  const CiRecord r = complete_intersection_experiment(cfg);
  const double fraction = static_cast<double>(r.complete_intersections) / 200.0;
  return {fraction >= 0.90, fmt("codim 2 in %zu/200 (%.3f)", r.complete_intersections, fraction)};
}

Outcome groebner_soundness() {
  Rng rng(1006);
  int sound = 0;
  for (int i = 0; i < 200; ++i) {
    const Ring ring = Ring::standard(1 + rng.index(3));
    std::vector<Polynomial> gens;
    for (std::size_t g = 0, count = 1 + rng.index(3); g < count; ++g) {
      gens.push_back(rng.polynomial(ring, 3, 4));
    }
    const Ideal ideal(ring, gens);
    const GroebnerBasis lex = buchberger(ideal, MonomialOrder::lex(ring.nvars()));
    const GroebnerBasis grevlex = buchberger(ideal, MonomialOrder::grevlex(ring.nvars()));
    bool ok = polyctrl::testing::s_pairs_vanish(lex) && polyctrl::testing::s_pairs_vanish(grevlex);
    for (const auto& g : gens) ok = ok && lex.contains(g) && grevlex.contains(g);
    ok = ok && ideal_dimension(lex).dim == ideal_dimension(grevlex).dim;
    sound += ok;
  }
  return {sound == 200, fmt("%d/200 ideals sound with matching dimensions", sound)};
}

Outcome determinant_oracle() {
  Rng rng(1007);
  int equal = 0;
  for (int i = 0; i < 200; ++i) {
    const Ring ring = Ring::standard(1 + rng.index(3));
    const std::size_t n = 1 + rng.index(4);
    PolyMatrix m(ring, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng.polynomial(ring, 2, 3));
    }
    equal += determinant(m) == polyctrl::testing::laplace_determinant(m);
  }
  return {equal == 200, fmt("%d/200 determinants identical", equal)};
}

Outcome module_invariance() {
  Rng rng(1008);
  int same = 0;
  for (int i = 0; i < 100; ++i) {
    const Ring ring = Ring::standard(2 + rng.index(2));
    const std::size_t l = 1 + rng.index(2);
    PolyMatrix m = polyctrl::testing::random_full_rank(rng, ring, l, l + rng.index(2), 2, 2);
    const Verdict before = decide(m);
    for (int op = 0; op < 3; ++op) polyctrl::testing::random_row_operation(rng, m);
    const Verdict after = decide(m);
    same += before.status == after.status && before.codim == after.codim;
  }
  return {same == 100, fmt("%d/100 verdicts unchanged", same)};
}

Outcome behavioral_evidence() {
  const Ring s1({"s"}, true);
  const Ring s2({"s1", "s2"}, true);
  auto uniform = [](std::vector<Cell> cells, std::vector<Rational> value) {
    Region r;
    r.values.assign(cells.size(), value);
    r.cells = std::move(cells);
    return r;
  };
  const std::vector<PatchProblem> diff_suite = {
      {Window({8}), uniform({{0}, {1}}, {0}), uniform({{6}, {7}}, {1})}};
  std::vector<Cell> left, right;
  for (long y = 0; y < 8; ++y) {
    for (long x : {0L, 1L}) left.push_back({x, y});
    for (long x : {6L, 7L}) right.push_back({x, y});
  }
  const std::vector<PatchProblem> grad_suite = {
      {Window({8, 8}), uniform(left, {0, 0}), uniform(right, {1, 1})}};
  const EvidenceReport diff = evidence_report(PolyMatrix::parse(s1, {{"s - 1"}}), diff_suite);
  const EvidenceReport grad =
      evidence_report(PolyMatrix::parse(s2, {{"s1 - 1", "s2 - 1"}}), grad_suite);
  const bool reports = diff.summary == "consistent" && diff.infeasible == 1 &&
                       grad.summary == "consistent" && grad.feasible == 1;

  Rng rng(1009);
  int matched = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.index(2);
    const Ring ring = Ring::standard(n, true, "s");
    PolyMatrix m(ring, 1 + rng.index(2), 1 + rng.index(2));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rng.polynomial(ring, 2, 3, 3));
    }
    std::vector<std::size_t> extents;
    for (std::size_t v = 0; v < n; ++v) extents.push_back(3 + rng.index(4));
    const Window window(extents);
    matched += kernel_basis(m, window).dimension() ==
               polyctrl::testing::dense_nullity(window_equations(m, window));
  }
  return {reports && matched == 50,
          "difference operator: " + diff.summary + ", gradient: " + grad.summary +
              fmt(", kernel dimensions %d/50 match", matched)};
}

Outcome reproducibility() {
  auto row = [] {
    std::string r = to_csv_row(run_experiment(underdetermined()));
    const auto last = r.rfind(',');
    return r.substr(0, r.rfind(',', last - 1)) + r.substr(last);
  };
  const std::string a = row();
  const std::string b = row();
  return {a == b, a == b ? "rows identical apart from wall_ms: " + a : "rows differ"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Kalman/Hautus equivalence", kalman_hautus},
      {"canonical instances", canonical_instances},
      {"genericity, underdetermined", genericity_underdetermined},
      {"genericity, square", genericity_square},
      {"complete intersections", complete_intersection},
      {"Groebner engine soundness", groebner_soundness},
      {"determinant oracle", determinant_oracle},
      {"module invariance", module_invariance},
      {"behavioral evidence", behavioral_evidence},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
