#pragma once

#include <string_view>
#include <vector>

#include "fullgraph/graph.hpp"

namespace fullgraph {

// Pattern mini-language:
//   K<m> complete, E<n> edgeless, S<m> star K_{1,m-1}, P<m> path, C<m> cycle,
//   g6:<text> literal graph6, and '+' for disjoint union ("K2+K1").
// Throws ParseError with the offending offset.
Graph parse_pattern(std::string_view spec);

// Comma-separated list of patterns.
std::vector<Graph> parse_pattern_list(std::string_view specs);

}  // namespace fullgraph
