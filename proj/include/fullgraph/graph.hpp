#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fullgraph/bits.hpp"

namespace fullgraph {

using Vertex = std::uint32_t;
using kernels::Word;

// Finite simple graph on vertices 0..order-1. Each vertex owns a row of
// fixed-width bit blocks; row(v) & row(u) is the common neighbourhood.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  static Graph from_edges(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + v / bits::kWordBits] >> (v % bits::kWordBits)) & 1U;
  }

  // Throws InvalidArgument for loops or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void set_edge(Vertex u, Vertex v, bool present);

  std::span<const Word> row(Vertex v) const noexcept { return {bits_.data() + v * words_, words_}; }

  std::size_t degree(Vertex v) const noexcept { return kernels::popcount(row(v)); }
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);  // throws on duplicates

  static VertexSet all(std::size_t order);

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Throws InvalidArgument if any member is >= host_order.
  void validate(std::size_t host_order) const;
  std::vector<Word> to_bits(std::size_t host_order) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

Graph complement(const Graph& g);

// Adds a false twin of v: the new vertex (index g.order()) copies N(v) and is not adjacent to v.
Graph duplicate_vertex(const Graph& g, Vertex v);

// Vertices are relabelled by ascending original index.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// new_index[v] is the image of v; must be a permutation of 0..order-1.
Graph relabel(const Graph& g, std::span<const Vertex> new_index);

Graph disjoint_union(const Graph& a, const Graph& b);

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);
std::size_t degree_into_set(const Graph& g, Vertex v, const VertexSet& s);

// Exact, by branch-and-bound with a clique-cover bound.
std::size_t independence_number(const Graph& g);
// Largest independent set containing v.
std::size_t alpha_with_vertex(const Graph& g, Vertex v);

// Lowest-index vertex among those of minimum degree.
Vertex min_degree_vertex(const Graph& g);

namespace families {
Graph complete(std::size_t m);
Graph empty(std::size_t n);
Graph star(std::size_t m);  // K_{1,m-1}; vertex 0 is the centre
Graph path(std::size_t m);
Graph cycle(std::size_t m);
Graph complete_bipartite(std::size_t a, std::size_t b);  // sides 0..a-1 and a..a+b-1
}  // namespace families

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace fullgraph
