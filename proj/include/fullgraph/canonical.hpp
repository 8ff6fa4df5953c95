#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fullgraph/graph.hpp"

namespace fullgraph {

constexpr std::size_t kMaxCanonicalOrder = 16;

// Degree refinement plus an individualisation tree with automorphism pruning.
struct CanonicalLabeling {
  std::vector<Vertex> positions;  // positions[i] = vertex placed at position i
  std::vector<Vertex> orbit;      // smallest vertex in each vertex's automorphism orbit
};

// Throws UnsupportedOrder above kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
// graph6 of canonical_graph(g); equal strings iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace fullgraph
