#include "polyctrl/genericity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "polyctrl/controllability.hpp"
#include "polyctrl/errors.hpp"

namespace polyctrl {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body body) {
  threads = std::min(resolve_threads(threads), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Rational sample_coefficient(std::uint32_t bound, TrialRng& rng) {
  const auto v = static_cast<std::int64_t>(rng.below(2ULL * bound));
  const std::int64_t c = bound;
  return Rational(v < c ? static_cast<long>(v - c) : static_cast<long>(v - c + 1));
}

}  // namespace

Density Density::parse(std::string_view text) {
  Rational r = parse_decimal_or_rational(text);
  if (r <= 0 || r > 1) throw DomainError("density must lie in (0, 1]");
  if (!r.get_num().fits_ulong_p() || !r.get_den().fits_ulong_p()) {
    throw DomainError("density has too many digits");
  }
  return Density{r.get_num().get_ui(), r.get_den().get_ui()};
}

std::string Density::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial_index)
    : key_(mix64(seed ^ mix64(trial_index * kGamma + 1))) {}

std::uint64_t TrialRng::next() { return mix64(key_ + (++counter_) * kGamma); }

std::uint64_t TrialRng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
  std::vector<Monomial> out;
  for (int degree = 0; degree <= d; ++degree) {
    std::vector<Monomial> level;
    Monomial m(n);
    // Enumerate compositions of `degree` into n parts recursively.
    auto rec = [&](auto& self, std::size_t var, int left) -> void {
      if (var + 1 == n) {
        m.set(var, left);
        level.push_back(m);
        return;
      }
      for (int e = left; e >= 0; --e) {
        m.set(var, e);
        self(self, var + 1, left - e);
      }
    };
    rec(rec, 0, degree);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint64_t SampleConfig::coefficient_slots() const {
  return static_cast<std::uint64_t>(l) * k * binomial(n + static_cast<std::size_t>(d), n);
}

Polynomial sample_polynomial(const Ring& ring, int d, std::uint32_t coeff_bound,
                             const Density& density, TrialRng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_up_to(ring.nvars(), d)) {
    const bool present = rng.below(density.den) < density.num;
    if (!present) continue;
    terms.push_back({m, sample_coefficient(coeff_bound, rng)});
  }
  return Polynomial(ring, std::move(terms));
}

PolyMatrix sample_matrix(const SampleConfig& cfg, std::size_t trial_index) {
  const Ring ring = Ring::standard(cfg.n);
  TrialRng rng(cfg.seed, trial_index);
  PolyMatrix out(ring, cfg.l, cfg.k);
  for (std::size_t i = 0; i < cfg.l; ++i) {
    for (std::size_t j = 0; j < cfg.k; ++j) {
      out.set(i, j, sample_polynomial(ring, cfg.d, cfg.coeff_bound, cfg.density, rng));
    }
  }
  return out;
}

void validate(const SampleConfig& cfg) {
  if (cfg.trials == 0) throw DomainError("trials must be positive");
  if (cfg.trials > kMaxTrials) throw DomainError("trials exceeds " + std::to_string(kMaxTrials));
  if (cfg.l == 0 || cfg.k == 0) throw DomainError("l and k must be positive");
  if (cfg.l > cfg.k) throw DomainError("l <= k is required (l > k is not decidable here)");
  if (cfg.n == 0 || cfg.n > kMaxExperimentVars) throw DomainError("n must lie in [1, 4]");
  if (cfg.d < 1 || cfg.d > kMaxExperimentDegree) throw DomainError("d must lie in [1, 3]");
  if (cfg.coeff_bound == 0) throw DomainError("coeff_bound must be positive");
  if (cfg.density.num == 0 || cfg.density.num > cfg.density.den) {
    throw DomainError("density must lie in (0, 1]");
  }
}

ExperimentRecord run_experiment(const SampleConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  struct Outcome {
    Status status = Status::Indeterminate;
    std::optional<ExtInt> codim;
  };
  std::vector<Outcome> outcomes(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t i) {
    const Verdict v = decide(sample_matrix(cfg, i));
    outcomes[i] = {v.status, v.codim};
  });
  ExperimentRecord record;
  record.config = cfg;
  for (const auto& o : outcomes) {
    switch (o.status) {
      case Status::Controllable:
        ++record.controllable;
        break;
      case Status::Uncontrollable:
        ++record.uncontrollable;
        break;
      case Status::Indeterminate:
        ++record.indeterminate;
        break;
    }
    if (o.codim) ++record.codim_histogram[*o.codim];
  }
  record.wall_time_ms = elapsed_ms(start);
  record.artifact_version = artifact_version();
  return record;
}

void validate(const CiConfig& cfg) {
  if (cfg.trials == 0) throw DomainError("trials must be positive");
  if (cfg.trials > kMaxTrials) throw DomainError("trials exceeds " + std::to_string(kMaxTrials));
  if (cfg.n == 0 || cfg.n > kMaxExperimentVars) throw DomainError("n must lie in [1, 4]");
  if (cfg.m == 0) throw DomainError("m must be positive");
  if (cfg.m > cfg.n) {
    throw DomainError("m > n: a proper nonempty variety has codimension at most n");
  }
  if (cfg.d < 1 || cfg.d > kMaxExperimentDegree) throw DomainError("d must lie in [1, 3]");
  if (cfg.coeff_bound == 0) throw DomainError("coeff_bound must be positive");
  if (cfg.density.num == 0 || cfg.density.num > cfg.density.den) {
    throw DomainError("density must lie in (0, 1]");
  }
}

CiRecord complete_intersection_experiment(const CiConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Ring ring = Ring::standard(cfg.n);
  std::vector<ExtInt> codims(cfg.trials, ExtInt(0));
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t i) {
    TrialRng rng(cfg.seed, i);
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < cfg.m; ++j) {
      gens.push_back(sample_polynomial(ring, cfg.d, cfg.coeff_bound, cfg.density, rng));
    }
    const GroebnerBasis gb = buchberger(Ideal(ring, std::move(gens)), MonomialOrder::grevlex(cfg.n));
    codims[i] = ideal_dimension(gb).codim;
  });
  CiRecord record;
  record.config = cfg;
  for (const auto& c : codims) {
    ++record.codim_histogram[c];
    if (c == ExtInt(static_cast<int>(cfg.m))) ++record.complete_intersections;
  }
  record.wall_time_ms = elapsed_ms(start);
  record.artifact_version = artifact_version();
  return record;
}

std::string artifact_version() { return POLYCTRL_VERSION; }

std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string histogram_json(const CodimHistogram& histogram) {
  // nlohmann orders object keys alphabetically ("10" < "2"); build in order.
  std::string out = "{";
  bool first = true;
  for (const auto& [codim, count] : histogram) {
    if (!first) out += ',';
    first = false;
    out += nlohmann::json(codim.to_string()).dump() + ":" + std::to_string(count);
  }
  return out + "}";
}

std::string experiment_csv_header() {
  return "seed,l,k,n,d,coeff_bound,density,trials,controllable,uncontrollable,indeterminate,"
         "codim_hist,wall_ms,version";
}

std::string to_csv_row(const ExperimentRecord& r) {
  const auto& c = r.config;
  std::ostringstream os;
  os << c.seed << ',' << c.l << ',' << c.k << ',' << c.n << ',' << c.d << ',' << c.coeff_bound
     << ',' << c.density.to_string() << ',' << c.trials << ',' << r.controllable << ','
     << r.uncontrollable << ',' << r.indeterminate << ',' << csv_quote(histogram_json(r.codim_histogram))
     << ',' << r.wall_time_ms << ',' << r.artifact_version;
  return os.str();
}

std::string ci_csv_header() {
  return "seed,m,n,d,coeff_bound,density,trials,complete_intersections,codim_hist,wall_ms,version";
}

std::string to_csv_row(const CiRecord& r) {
  const auto& c = r.config;
  std::ostringstream os;
  os << c.seed << ',' << c.m << ',' << c.n << ',' << c.d << ',' << c.coeff_bound << ','
     << c.density.to_string() << ',' << c.trials << ',' << r.complete_intersections << ','
     << csv_quote(histogram_json(r.codim_histogram)) << ',' << r.wall_time_ms << ','
     << r.artifact_version;
  return os.str();
}

}  // namespace polyctrl
