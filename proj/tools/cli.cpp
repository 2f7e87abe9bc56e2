#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "polyctrl/controllability.hpp"
#include "polyctrl/errors.hpp"
#include "polyctrl/genericity.hpp"
#include "polyctrl/io.hpp"
#include "polyctrl/patching.hpp"

namespace polyctrl::cli {
namespace {

using io::json;

std::size_t threads_from_env() {
  const char* value = std::getenv("CTRL_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  try {
    return static_cast<std::size_t>(std::stoul(value));
  } catch (const std::exception&) {
    throw DomainError("CTRL_THREADS must be a nonnegative integer");
  }
}

RationalMatrix matrix_arg(const std::string& text, const char* flag) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw ParseError(std::string(flag) + " is not a JSON matrix", 0);
  }
  if (!j.is_array()) throw SchemaError(std::string(flag) + " must be a list of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw SchemaError(std::string(flag) + " must be a list of rows");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(io::rational_from_json(v));
    rows.push_back(std::move(r));
  }
  return RationalMatrix::from_rows(rows);
}

void append_csv(const std::string& path, const std::string& header, const std::string& row) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
  if (fresh) out << header << '\n';
  out << row << '\n';
  if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
}

double since_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err) {
  const PolyMatrix m = io::matrix_from_json(io::load_json_file(path));
  const auto start = std::chrono::steady_clock::now();
  const Verdict v = decide(m);
  const double ms = since_ms(start);
  json j = io::to_json(v);
  j["time_ms"] = ms;
  out << j.dump() << '\n';
  err << "status: " << to_string(v.status) << '\n'
      << "codim: " << (v.codim ? v.codim->to_string() : "n/a") << '\n'
      << "reason: " << v.reason << '\n';
  if (v.minors) {
    err << "minor ideal: " << v.minors->ideal.generators().size() << " nonzero of "
        << v.minors->minors.size() << " minors\n";
  }
  if (v.basis) err << "groebner basis size: " << v.basis->size() << '\n';
  err << "time: " << ms << " ms\n";
  switch (v.status) {
    case Status::Controllable:
      return kControllable;
    case Status::Uncontrollable:
      return kUncontrollable;
    case Status::Indeterminate:
      return kIndeterminate;
  }
  return kInternal;
}

int cmd_gb(const std::string& path, std::ostream& out) {
  const auto file = io::ideal_from_json(io::load_json_file(path));
  out << io::to_json(buchberger(file.ideal, file.order)).dump() << '\n';
  return kOk;
}

int cmd_dim(const std::string& path, std::ostream& out) {
  const auto file = io::ideal_from_json(io::load_json_file(path));
  const GroebnerBasis gb = buchberger(file.ideal, file.order);
  out << io::to_json(ideal_dimension(gb), gb.ring()).dump() << '\n';
  return kOk;
}

int cmd_minors(const std::string& path, std::size_t size, std::ostream& out) {
  const PolyMatrix m = io::matrix_from_json(io::load_json_file(path));
  out << io::to_json(minors(m, size)).dump() << '\n';
  return kOk;
}

int cmd_patch(const std::string& path, std::ostream& out, std::ostream& err) {
  const io::PatchFile file = io::patch_from_json(io::load_json_file(path));
  const EvidenceReport report = evidence_report(file.system, file.problems);
  json j = io::to_json(report);
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (report.entries[i].result) {
      j["entries"][i]["result"] =
          io::to_json(*report.entries[i].result, file.problems[i].window, file.system.cols());
    }
  }
  out << j.dump() << '\n';
  err << "symbolic verdict: " << to_string(report.verdict.status) << '\n'
      << "patches: " << report.feasible << " feasible, " << report.infeasible << " infeasible\n"
      << "evidence: " << report.summary << '\n';
  for (const auto& d : report.discrepancies) err << "  " << d << '\n';
  return kOk;
}

int cmd_oracle(const std::string& x_text, const std::string& u_text, std::ostream& out,
               std::ostream& err) {
  const RationalMatrix x = matrix_arg(x_text, "--X");
  const RationalMatrix u = matrix_arg(u_text, "--U");
  const CrossCheck cc = cross_check_state_space(x, u);
  out << json{{"agree", cc.agree},
              {"controllable", cc.verdict.status == Status::Controllable},
              {"kalman", cc.kalman},
              {"verdict", io::to_json(cc.verdict)}}
             .dump()
      << '\n';
  err << "hautus/minor test: " << to_string(cc.verdict.status)
      << ", kalman rank test: " << (cc.kalman ? "controllable" : "uncontrollable")
      << (cc.agree ? " (agree)" : " (DISAGREE)") << '\n';
  return kOk;
}

struct ExperimentFlags {
  std::size_t l = 1, k = 2, n = 2, m = 2;
  int d = 2;
  std::size_t trials = 500;
  std::uint64_t seed = 42;
  std::uint32_t coeff_bound = 9;
  std::string density = "1";
  std::string out;
};

int cmd_experiment(const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
  SampleConfig cfg;
  cfg.l = f.l;
  cfg.k = f.k;
  cfg.n = f.n;
  cfg.d = f.d;
  cfg.trials = f.trials;
  cfg.seed = f.seed;
  cfg.coeff_bound = f.coeff_bound;
  cfg.density = Density::parse(f.density);
  cfg.threads = threads_from_env();
  validate(cfg);
  const ExperimentRecord r = run_experiment(cfg);
  if (!f.out.empty()) append_csv(f.out, experiment_csv_header(), to_csv_row(r));
  out << io::to_json(r).dump() << '\n';
  err << "trials: " << cfg.trials << ", controllable: " << r.controllable
      << ", uncontrollable: " << r.uncontrollable << ", indeterminate: " << r.indeterminate
      << ", codim histogram: " << histogram_json(r.codim_histogram) << ", " << r.wall_time_ms
      << " ms\n";
  return kOk;
}

int cmd_ci_experiment(const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
  CiConfig cfg;
  cfg.m = f.m;
  cfg.n = f.n;
  cfg.d = f.d;
  cfg.trials = f.trials;
  cfg.seed = f.seed;
  cfg.coeff_bound = f.coeff_bound;
  cfg.density = Density::parse(f.density);
  cfg.threads = threads_from_env();
  validate(cfg);
  const CiRecord r = complete_intersection_experiment(cfg);
  if (!f.out.empty()) append_csv(f.out, ci_csv_header(), to_csv_row(r));
  out << io::to_json(r).dump() << '\n';
  err << "trials: " << cfg.trials << ", codim == m: " << r.complete_intersections
      << ", codim histogram: " << histogram_json(r.codim_histogram) << ", " << r.wall_time_ms
      << " ms\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact controllability analysis of polynomial-matrix systems", "polyctrl"};
  app.require_subcommand(1);

  std::string path;
  std::size_t minor_size = 1;
  std::string x_text, u_text;
  ExperimentFlags flags;

  auto* analyze = app.add_subcommand("analyze", "Decide controllability of a matrix file");
  analyze->add_option("file", path, "Matrix JSON file")->required();
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb->add_option("file", path, "Ideal JSON file")->required();
  auto* dim = app.add_subcommand("dim", "Dimension and codimension of an ideal file");
  dim->add_option("file", path, "Ideal JSON file")->required();
  auto* mins = app.add_subcommand("minors", "All minors of a given size");
  mins->add_option("file", path, "Matrix JSON file")->required();
  mins->add_option("--size", minor_size, "Minor size")->required();
  auto* patch = app.add_subcommand("patch", "Patching evidence on finite lattice windows");
  patch->add_option("file", path, "Patch problem JSON file")->required();
  auto* oracle = app.add_subcommand("oracle", "Kalman vs. minor-ideal test on dx/dt = Xx + Uu");
  oracle->add_option("--X", x_text, "State matrix as JSON, e.g. [[0,1],[0,0]]")->required();
  oracle->add_option("--U", u_text, "Input matrix as JSON, e.g. [[0],[1]]")->required();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", flags.n, "Number of variables");
    cmd->add_option("--d", flags.d, "Total degree bound");
    cmd->add_option("--trials", flags.trials, "Number of trials");
    cmd->add_option("--seed", flags.seed, "Random seed");
    cmd->add_option("--coeff-bound", flags.coeff_bound, "Coefficients drawn from [-c, c] \\ {0}");
    cmd->add_option("--density", flags.density, "Probability a coefficient slot is nonzero");
    cmd->add_option("--out", flags.out, "CSV file to append one row to");
  };
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo controllability experiment");
  experiment->add_option("--l", flags.l, "Rows (laws)");
  experiment->add_option("--k", flags.k, "Columns (signal components)");
  add_common(experiment);
  auto* ci = app.add_subcommand("ci-experiment", "Monte Carlo complete-intersection experiment");
  ci->add_option("--m", flags.m, "Number of polynomials");
  add_common(ci);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, out, err);
    if (*gb) return cmd_gb(path, out);
    if (*dim) return cmd_dim(path, out);
    if (*mins) return cmd_minors(path, minor_size, out);
    if (*patch) return cmd_patch(path, out, err);
    if (*oracle) return cmd_oracle(x_text, u_text, out, err);
    if (*experiment) return cmd_experiment(flags, out, err);
    if (*ci) return cmd_ci_experiment(flags, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kSchema;
  } catch (const RingMismatch& e) {
    err << "schema error: " << e.what() << '\n';
    return kSchema;
  } catch (const nlohmann::json::exception& e) {
    err << "schema error: " << e.what() << '\n';
    return kSchema;
  } catch (const DomainError& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace polyctrl::cli
