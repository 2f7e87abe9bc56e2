#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyctrl/controllability.hpp"
#include "polyctrl/genericity.hpp"
#include "polyctrl/groebner.hpp"
#include "polyctrl/patching.hpp"
#include "polyctrl/polymatrix.hpp"

namespace polyctrl::io {

using nlohmann::json;

/// {"vars": ["x", "y"] | 3, "laurent": false}. An integer n means x1..xn.
Ring ring_from_json(const json& j);
json to_json(const Ring& ring);

/// Matrix file: {"ring": {...}, "rows": [["x1", "x2"], ...]}.
PolyMatrix matrix_from_json(const json& j);
json to_json(const PolyMatrix& m);

struct IdealFile {
  Ideal ideal;
  MonomialOrder order;
};
/// {"vars": [...] | n, "laurent": false, "gens": [...], "order": "grevlex" | "lex"};
/// the ring may also be given as "ring": {...}.
IdealFile ideal_from_json(const json& j);

struct PatchFile {
  PolyMatrix system;
  std::vector<PatchProblem> problems;
};
/// Matrix file fields plus either a single problem ("window", "region1",
/// "region2", optional "margin") or "problems": [{...}, ...].
PatchFile patch_from_json(const json& j);

/// Exact rationals are emitted as JSON integers when they fit, else as "p/q".
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const ExtInt& value);
json to_json(const DimensionResult& d, const Ring& ring);
json to_json(const GroebnerBasis& gb);
json to_json(const MinorIdeal& mi);
/// {"status", "codim", "reason", ...}
json to_json(const Verdict& v);
json to_json(const ExperimentRecord& r);
json to_json(const CiRecord& r);
json to_json(const PatchResult& r, const Window& window, std::size_t components);
json to_json(const EvidenceReport& r);

/// Reads and parses a JSON file; throws std::ios_base::failure on I/O errors
/// and SchemaError on malformed JSON.
json load_json_file(const std::string& path);

}  // namespace polyctrl::io
