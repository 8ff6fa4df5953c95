#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include <json.hpp>

#include "fullgraph/designs.hpp"
#include "fullgraph/graph.hpp"

namespace fullgraph {

enum class TheoremTag { cyclic, design, h_vs_empty, star, complete_bipartite, delta_zero };

std::string_view to_string(TheoremTag tag) noexcept;
// Throws InvalidArgument for an unknown name.
TheoremTag theorem_tag_from_string(std::string_view name);

struct ConstructionRecipe {
  TheoremTag theorem_tag = TheoremTag::cyclic;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::size_t claimed_order = 0;
};

struct Construction {
  Graph graph;
  ConstructionRecipe recipe;
};

// Two copies of each H_r minus a distinguished vertex, joined cyclically.
// Order 2 * sum(n(H_i) - 1). Patterns of order 1 are rejected.
Construction cyclic_full(std::span<const Graph> patterns);

// One pattern per parallel class, one copy per block. Patterns shorter than
// the block size are padded by duplicating vertex 0.
Construction design_full(std::span<const Graph> patterns, const ResolvableDesign& d);

// (h, independent n-set)-full graph of order n - 1 + delta*r + ceil(n/(r-1)).
Construction h_vs_empty(const Graph& h, std::size_t n, std::optional<std::size_t> r = {});

// (S_m, independent n-set)-full bipartite graph of order n - 1 + k + r.
// k defaults to the smallest minimiser of the star upper bound.
Construction star_full(std::size_t m, std::size_t n, std::optional<std::size_t> k = {});

// K_{n,m-1} for 2 <= n < m.
Construction complete_bipartite_full(std::size_t m, std::size_t n);

// h plus n - s isolated vertices, s = min_v alpha(h, v).
Construction delta_zero_construction(const Graph& h, std::size_t n);

}  // namespace fullgraph
