#pragma once

#include <string>

#include "json.hpp"
#include "minmax/action.hpp"
#include "minmax/census.hpp"
#include "minmax/tree.hpp"

namespace minmax {

/// Indented one-node-per-line rendering: root first, children left then
/// right, each line "pos:entry [kind]".
std::string render_ascii(const MinMaxTree& t);

/// DOT digraph: one node per position (emitted in position order) labeled
/// "pos:entry" with a kind-specific shape, one parent->child edge labeled
/// "l" or "r". Byte-stable for a given tree.
std::string export_dot(const MinMaxTree& t);

nlohmann::ordered_json tree_to_json(const MinMaxTree& t);

std::string census_to_text(const CensusTable& t);
std::string census_to_csv(const CensusTable& t);  // header i,leaf,d0,d1,d2
nlohmann::ordered_json census_to_json(const CensusTable& t);

std::string estimate_to_text(const EstimateTable& e);
std::string estimate_to_csv(const EstimateTable& e);  // header i,q_hat,se
nlohmann::ordered_json estimate_to_json(const EstimateTable& e);

nlohmann::ordered_json orbit_to_json(const OrbitRecord& o);

/// One "[PASS]/[FAIL] name params" line per check plus a summary line;
/// failures carry their counterexample.
std::string report_to_text(const VerifyReport& r);
nlohmann::ordered_json report_to_json(const VerifyReport& r);

}  // namespace minmax
