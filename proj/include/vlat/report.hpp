#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vlat/errors.hpp"
#include "vlat/sequence.hpp"

namespace vlat::report {

using Json = nlohmann::ordered_json;

inline const std::string kSchemaVersion = "1";

/// {"approx": [doubles or null], "exact": ["p/q" or null]}
Json element(const RealElement& x);
/// {"re": element, "im": element}
Json element(const ComplexElement& z);
Json labels(const std::vector<std::string>& xs);
Json model(const std::string& name, const Model& m);
/// {"heuristic": bool, "samples": [{"n": n, "q": element}]} on the fixed grid.
Json witness(const DominatorWitness& w);
/// {"code", "message", "points"}
Json error(const std::exception& e);

/// An empty report skeleton with every required top-level field.
Json skeleton(const std::string& command);

/// Serializes with doubles at 17 significant digits and non-finite values as
/// null. Object keys keep insertion order, so output is deterministic.
std::string dump(const Json& j, int indent = 2);

/// Per-verdict text tables with point labels.
std::string render_text(const Json& report);

}  // namespace vlat::report
