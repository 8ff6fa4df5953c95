#pragma once

#include <json.hpp>

#include "fullgraph/bounds.hpp"
#include "fullgraph/constructions.hpp"
#include "fullgraph/designs.hpp"
#include "fullgraph/oracle.hpp"
#include "fullgraph/verifier.hpp"

namespace fullgraph {

using Json = nlohmann::ordered_json;

// {q, points, classes: [[block...]...]}; q is the block size.
Json to_json(const ResolvableDesign& d);
// Accepts the layout above; throws ParseError on malformed input. The result
// is not validated, see validate_design.
ResolvableDesign design_from_json(const Json& j);

Json to_json(const ConstructionRecipe& r);
Json to_json(const DesignReport& r);

// {verdict, host_order, patterns: [{pattern_g6, uncovered, witnesses: {v: [roles...]}}]}
Json to_json(const FullnessReport& r);

Json to_json(const bounds::BoundSummary& s);

// Wall time and cache provenance are left out unless include_timing is set,
// so reruns produce identical output.
Json to_json(const SearchResult& r, bool include_timing = false);

}  // namespace fullgraph
