#pragma once

#include <string>

#include <json.hpp>

#include "barriers/barrier.hpp"
#include "barriers/ground_set.hpp"
#include "barriers/seq.hpp"

namespace barriers {

using nlohmann::json;

// Barrier specs are tagged constructor trees. Leaves may be written as
// shorthand strings:
//   "unit" | "schreier" | "exact:<n>" | "canonical:<ordinal>"
// or as objects:
//   {"unit": {}} {"schreier": {}} {"exact": n} {"canonical": "<ordinal>"}
//   {"product": [A, B]} {"plus": B}
//   {"derived": {"inner": B, "n": n}}
//   {"restrict": {"inner": B, "set": <ground set>}}
// Ground sets are integer arrays or {"prefix": [...], "tail": {"start": a, "step": d}}.

BarrierSpec barrier_from_json(const json& j);
json barrier_to_json(const BarrierSpec& b);
BarrierSpec parse_barrier_shorthand(const std::string& text);

GroundSet ground_from_json(const json& j);
json ground_to_json(const GroundSet& g);

Seq seq_from_json(const json& j);
json seq_to_json(const Seq& s);

json color_to_json(const Color& c);
Color color_from_json(const json& j);

/// Command-line argument holding JSON: inline JSON text (starting with
/// '{', '[' or '"'), otherwise a path to a JSON file. When neither applies
/// and `allow_shorthand` is set, the raw text comes back as a JSON string.
json load_json_argument(const std::string& arg, bool allow_shorthand);

/// Shorthand, inline JSON, or JSON file.
BarrierSpec load_barrier_argument(const std::string& arg);

}  // namespace barriers
