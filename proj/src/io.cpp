#include "polyctrl/io.hpp"

#include <fstream>
#include <sstream>

#include "polyctrl/errors.hpp"
#include "polyctrl/parser.hpp"

namespace polyctrl::io {
namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw SchemaError(std::string(what) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Cell cell_from_json(const json& j, std::size_t dims) {
  Cell c;
  if (j.is_number_integer()) {
    c.push_back(j.get<long>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw SchemaError("cell coordinates must be integers");
      c.push_back(v.get<long>());
    }
  } else {
    throw SchemaError("a cell is an integer or an array of integers");
  }
  if (c.size() != dims) throw SchemaError("cell has the wrong number of coordinates");
  return c;
}

std::vector<Rational> value_vector(const json& j, std::size_t k) {
  std::vector<Rational> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(rational_from_json(v));
  } else {
    out.push_back(rational_from_json(j));
  }
  if (out.size() != k) throw SchemaError("value vector length must equal the column count");
  return out;
}

Region region_from_json(const json& j, std::size_t dims, std::size_t k) {
  Region r;
  if (j.is_null()) return r;
  for (const auto& c : require(j, "cells")) r.cells.push_back(cell_from_json(c, dims));
  if (j.contains("value")) {
    const auto v = value_vector(j.at("value"), k);
    r.values.assign(r.cells.size(), v);
  } else {
    const json& values = require(j, "values");
    if (!values.is_array() || values.size() != r.cells.size()) {
      throw SchemaError("'values' must have one entry per cell");
    }
    for (const auto& v : values) r.values.push_back(value_vector(v, k));
  }
  return r;
}

PatchProblem problem_from_json(const json& j, std::size_t dims, std::size_t k) {
  std::vector<std::size_t> extents;
  const json& w = require(j, "window");
  if (w.is_number_unsigned()) {
    extents.push_back(w.get<std::size_t>());
  } else if (w.is_array()) {
    for (const auto& e : w) {
      if (!e.is_number_unsigned()) throw SchemaError("window extents must be positive integers");
      extents.push_back(e.get<std::size_t>());
    }
  } else {
    throw SchemaError("window must be an array of extents");
  }
  PatchProblem p{Window(std::move(extents)), {}, {}, 1};
  if (p.window.dims() != dims) throw SchemaError("window dimension must match the ring");
  p.region1 = region_from_json(j.value("region1", json()), dims, k);
  p.region2 = region_from_json(j.value("region2", json()), dims, k);
  if (j.contains("margin")) p.margin = j.at("margin").get<std::size_t>();
  return p;
}

json cell_to_json(const Cell& c) { return c.size() == 1 ? json(c[0]) : json(c); }

}  // namespace

Ring ring_from_json(const json& j) {
  const json& vars = require(j, "vars");
  const bool laurent = j.value("laurent", false);
  try {
    if (vars.is_number_unsigned()) return Ring::standard(vars.get<std::size_t>(), laurent);
    return Ring(string_list(vars, "vars"), laurent);
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const Ring& ring) { return {{"vars", ring.var_names()}, {"laurent", ring.laurent()}}; }

PolyMatrix matrix_from_json(const json& j) {
  const Ring ring = ring_from_json(require(j, "ring"));
  const json& rows = require(j, "rows");
  if (!rows.is_array() || rows.empty()) throw SchemaError("'rows' must be a nonempty array");
  std::vector<std::vector<std::string>> text;
  for (const auto& row : rows) text.push_back(string_list(row, "each row"));
  return PolyMatrix::parse(ring, text);
}

json to_json(const PolyMatrix& m) { return {{"ring", to_json(m.ring())}, {"rows", m.to_strings()}}; }

IdealFile ideal_from_json(const json& j) {
  const Ring ring = j.contains("ring") ? ring_from_json(j.at("ring")) : ring_from_json(j);
  if (ring.laurent()) throw SchemaError("ideal files need a non-Laurent ring");
  std::vector<Polynomial> gens;
  for (const auto& g : string_list(require(j, "gens"), "gens")) gens.push_back(parse_polynomial(g, ring));
  const std::string order = j.value("order", "grevlex");
  const std::size_t n = ring.nvars();
  if (order == "grevlex") return {Ideal(ring, std::move(gens)), MonomialOrder::grevlex(n)};
  if (order == "lex") return {Ideal(ring, std::move(gens)), MonomialOrder::lex(n)};
  throw SchemaError("unknown order '" + order + "' (expected grevlex or lex)");
}

PatchFile patch_from_json(const json& j) {
  PatchFile file{matrix_from_json(j), {}};
  const std::size_t dims = file.system.ring().nvars();
  const std::size_t k = file.system.cols();
  if (j.contains("problems")) {
    for (const auto& p : j.at("problems")) file.problems.push_back(problem_from_json(p, dims, k));
  } else if (j.contains("window")) {
    file.problems.push_back(problem_from_json(j, dims, k));
  }
  return file;
}

json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_decimal_or_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(std::string("bad rational: ") + e.what());
    }
  }
  throw SchemaError("rationals are integers or strings such as \"3/4\"");
}

json to_json(const ExtInt& value) {
  if (value.is_infinite()) return "inf";
  return value.value();
}

json to_json(const DimensionResult& d, const Ring& ring) {
  json witness = json::array();
  for (std::size_t i : d.independent_set) witness.push_back(ring.var_name(i));
  return {{"dim", d.dim}, {"codim", to_json(d.codim)}, {"independent_set", witness}};
}

json to_json(const GroebnerBasis& gb) {
  json elements = json::array();
  for (const auto& g : gb.elements()) elements.push_back(g.to_string());
  return {{"order", gb.order().name()}, {"size", gb.size()}, {"basis", elements}};
}

json to_json(const MinorIdeal& mi) {
  json minors = json::array();
  for (const auto& m : mi.minors) minors.push_back(m.to_string());
  return {{"size", mi.size},
          {"count", mi.minors.size()},
          {"nonzero", mi.ideal.generators().size()},
          {"minors", minors}};
}

json to_json(const Verdict& v) {
  json out = {{"status", to_string(v.status)},
              {"codim", v.codim ? to_json(*v.codim) : json()},
              {"reason", v.reason},
              {"rank", v.rank}};
  if (v.minors) {
    out["minor_count"] = v.minors->minors.size();
    out["nonzero_minors"] = v.minors->ideal.generators().size();
  }
  if (v.basis) out["basis_size"] = v.basis->size();
  if (v.dimension && v.basis) out["dimension"] = to_json(*v.dimension, v.basis->ring());
  return out;
}

namespace {

json histogram_to_json(const CodimHistogram& h) {
  json out = json::object();
  for (const auto& [codim, count] : h) out[codim.to_string()] = count;
  return out;
}

}  // namespace

json to_json(const ExperimentRecord& r) {
  const auto& c = r.config;
  return {{"seed", c.seed},
          {"l", c.l},
          {"k", c.k},
          {"n", c.n},
          {"d", c.d},
          {"coeff_bound", c.coeff_bound},
          {"density", c.density.to_string()},
          {"trials", c.trials},
          {"coefficient_slots", c.coefficient_slots()},
          {"controllable", r.controllable},
          {"uncontrollable", r.uncontrollable},
          {"indeterminate", r.indeterminate},
          {"codim_hist", histogram_to_json(r.codim_histogram)},
          {"wall_ms", r.wall_time_ms},
          {"version", r.artifact_version}};
}

json to_json(const CiRecord& r) {
  const auto& c = r.config;
  return {{"seed", c.seed},
          {"m", c.m},
          {"n", c.n},
          {"d", c.d},
          {"coeff_bound", c.coeff_bound},
          {"density", c.density.to_string()},
          {"trials", c.trials},
          {"complete_intersections", r.complete_intersections},
          {"codim_hist", histogram_to_json(r.codim_histogram)},
          {"wall_ms", r.wall_time_ms},
          {"version", r.artifact_version}};
}

json to_json(const PatchResult& r, const Window& window, std::size_t components) {
  json out = {{"feasible", r.feasible}};
  if (r.witness) {
    json cells = json::array();
    for (std::size_t i = 0; i < window.cell_count(); ++i) {
      json values = json::array();
      for (std::size_t j = 0; j < components; ++j) {
        values.push_back(rational_to_json((*r.witness)[i * components + j]));
      }
      cells.push_back({{"cell", cell_to_json(window.cell(i))}, {"value", values}});
    }
    out["witness"] = cells;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const EvidenceReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json item = {{"label", e.label}};
    if (e.result) {
      item["feasible"] = e.result->feasible;
    } else {
      item["error"] = e.error;
    }
    entries.push_back(item);
  }
  return {{"verdict", to_json(r.verdict)},
          {"consistent", r.consistent},
          {"no_evidence", r.no_evidence},
          {"feasible", r.feasible},
          {"infeasible", r.infeasible},
          {"discrepancies", r.discrepancies},
          {"summary", r.summary},
          {"entries", entries},
          {"note",
           "finite-window infeasibility is evidence only; a patch may need room outside the "
           "window"}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "'", e.byte);
  }
}

}  // namespace polyctrl::io
