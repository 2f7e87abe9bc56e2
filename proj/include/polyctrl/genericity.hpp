#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polyctrl/ext_int.hpp"
#include "polyctrl/polymatrix.hpp"

namespace polyctrl {

/// Probability that a coefficient slot is nonzero, as an exact fraction in (0, 1].
struct Density {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  static Density parse(std::string_view text);  ///< "1", "0.5", "1/3"
  std::string to_string() const;
  friend bool operator==(const Density&, const Density&) = default;
};

/// Counter-based stream: the i-th output depends only on (key, i).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial_index);
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Monomials of total degree <= d in n variables: by degree, then
/// descending exponent vector. There are C(n+d, n) of them.
std::vector<Monomial> monomials_up_to(std::size_t n, int d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct SampleConfig {
  std::size_t l = 1;
  std::size_t k = 2;
  std::size_t n = 2;
  int d = 2;
  std::uint32_t coeff_bound = 9;
  Density density;
  std::size_t trials = 500;
  std::uint64_t seed = 42;
  std::size_t threads = 1;  ///< 0 = hardware concurrency

  /// l * k * C(n+d, n)
  std::uint64_t coefficient_slots() const;
};

/// Guard ranges enforced by run_experiment.
inline constexpr std::size_t kMaxExperimentVars = 4;
inline constexpr int kMaxExperimentDegree = 3;
inline constexpr std::size_t kMaxTrials = 10000;

using CodimHistogram = std::map<ExtInt, std::size_t>;

struct ExperimentRecord {
  SampleConfig config;
  std::size_t controllable = 0;
  std::size_t uncontrollable = 0;
  std::size_t indeterminate = 0;
  CodimHistogram codim_histogram;  ///< over decided trials
  std::int64_t wall_time_ms = 0;
  std::string artifact_version;
};

/// One random matrix over Q[x1..xn]; a pure function of (config, trial_index).
PolyMatrix sample_matrix(const SampleConfig& cfg, std::size_t trial_index);

void validate(const SampleConfig& cfg);
ExperimentRecord run_experiment(const SampleConfig& cfg);

struct CiConfig {
  std::size_t m = 2;
  std::size_t n = 2;
  int d = 2;
  std::uint32_t coeff_bound = 9;
  Density density;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::size_t threads = 1;
};

struct CiRecord {
  CiConfig config;
  std::size_t complete_intersections = 0;  ///< trials with codim == m
  CodimHistogram codim_histogram;
  std::int64_t wall_time_ms = 0;
  std::string artifact_version;
};

/// Random polynomial of total degree <= d, drawn from `rng`.
Polynomial sample_polynomial(const Ring& ring, int d, std::uint32_t coeff_bound,
                             const Density& density, TrialRng& rng);

void validate(const CiConfig& cfg);
CiRecord complete_intersection_experiment(const CiConfig& cfg);

std::string artifact_version();
std::size_t resolve_threads(std::size_t requested);

std::string experiment_csv_header();
std::string to_csv_row(const ExperimentRecord& record);
std::string ci_csv_header();
std::string to_csv_row(const CiRecord& record);
/// {"1": 480, "inf": 3} with keys in increasing codimension.
std::string histogram_json(const CodimHistogram& histogram);

}  // namespace polyctrl
