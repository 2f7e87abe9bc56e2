// Thin pybind11 layer. Structured arguments and results cross the boundary as
// JSON text in the same schema the command-line tool reads and writes; the
// Python package converts to and from native objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyctrl/errors.hpp"
#include "polyctrl/io.hpp"
#include "polyctrl/parser.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace polyctrl;

namespace {

PolyMatrix matrix(const std::string& text) { return io::matrix_from_json(json::parse(text)); }

RationalMatrix rational_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    auto& out = values.emplace_back();
    for (const auto& v : row) out.push_back(parse_decimal_or_rational(v));
  }
  if (values.empty()) throw DomainError("matrix needs at least one row");
  return RationalMatrix::from_rows(values);
}

template <class Config>
void fill_common(Config& cfg, const json& j) {
  cfg.d = j.value("d", cfg.d);
  cfg.coeff_bound = j.value("coeff_bound", cfg.coeff_bound);
  if (j.contains("density")) cfg.density = Density::parse(j.at("density").get<std::string>());
  cfg.trials = j.value("trials", cfg.trials);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.threads = j.value("threads", cfg.threads);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact controllability analysis for linear systems of PDEs";
  m.attr("__version__") = artifact_version();

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());

  m.def("parse", [](const std::string& text, const std::string& ring) {
    return parse_polynomial(text, io::ring_from_json(json::parse(ring))).to_string();
  });

  m.def("decide", [](const std::string& system) { return io::to_json(decide(matrix(system))).dump(); });
  m.def("decide_1d",
        [](const std::string& system) { return io::to_json(decide_1d(matrix(system))).dump(); });

  m.def("kalman_rank", [](const std::vector<std::vector<std::string>>& x,
                          const std::vector<std::vector<std::string>>& u) {
    return kalman_rank(rational_matrix(x), rational_matrix(u));
  });
  m.def("cross_check", [](const std::vector<std::vector<std::string>>& x,
                          const std::vector<std::vector<std::string>>& u) {
    const CrossCheck cc = cross_check_state_space(rational_matrix(x), rational_matrix(u));
    json out = {{"kalman", cc.kalman}, {"agree", cc.agree}, {"verdict", io::to_json(cc.verdict)}};
    return out.dump();
  });

  m.def("groebner", [](const std::string& ideal) {
    const io::IdealFile f = io::ideal_from_json(json::parse(ideal));
    return io::to_json(buchberger(f.ideal, f.order)).dump();
  });
  m.def("dimension", [](const std::string& ideal) {
    const io::IdealFile f = io::ideal_from_json(json::parse(ideal));
    const GroebnerBasis gb = buchberger(f.ideal, MonomialOrder::grevlex(f.ideal.ring().nvars()));
    return io::to_json(ideal_dimension(gb), f.ideal.ring()).dump();
  });

  m.def("minors", [](const std::string& system, std::size_t size) {
    return io::to_json(minors(matrix(system), size)).dump();
  });
  m.def("determinant",
        [](const std::string& system) { return determinant(matrix(system)).to_string(); });
  m.def("rank", [](const std::string& system) { return symbolic_rank(matrix(system)); });

  m.def("run_experiment", [](const std::string& config) {
    const json j = json::parse(config);
    SampleConfig cfg;
    cfg.l = j.value("l", cfg.l);
    cfg.k = j.value("k", cfg.k);
    cfg.n = j.value("n", cfg.n);
    fill_common(cfg, j);
    ExperimentRecord r;
    {
      py::gil_scoped_release release;
      r = run_experiment(cfg);
    }
    json out = io::to_json(r);
    out["csv"] = to_csv_row(r);
    return out.dump();
  });
  m.def("ci_experiment", [](const std::string& config) {
    const json j = json::parse(config);
    CiConfig cfg;
    cfg.m = j.value("m", cfg.m);
    cfg.n = j.value("n", cfg.n);
    fill_common(cfg, j);
    CiRecord r;
    {
      py::gil_scoped_release release;
      r = complete_intersection_experiment(cfg);
    }
    return io::to_json(r).dump();
  });

  m.def("kernel_dimension", [](const std::string& system, const std::vector<std::size_t>& window) {
    return kernel_basis(matrix(system), Window(window)).dimension();
  });
  m.def("patch", [](const std::string& problem) {
    const io::PatchFile f = io::patch_from_json(json::parse(problem));
    return io::to_json(evidence_report(f.system, f.problems)).dump();
  });
}
