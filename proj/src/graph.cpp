#include "fullgraph/graph.hpp"

#include <algorithm>
#include <string>

#include "fullgraph/error.hpp"

namespace fullgraph {

Graph::Graph(std::size_t order)
    : order_(order), words_(bits::words_for(order)), bits_(order * bits::words_for(order), 0) {}

Graph Graph::from_edges(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph Graph::from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_)
    throw InvalidArgument("vertex out of range: {" + std::to_string(u) + "," + std::to_string(v) + "} in graph of order " +
                          std::to_string(order_));
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
void Graph::remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  check_pair(u, v);
  std::span<Word> ru{bits_.data() + u * words_, words_};
  std::span<Word> rv{bits_.data() + v * words_, words_};
  if (present) {
    bits::set(ru, v);
    bits::set(rv, u);
  } else {
    bits::reset(ru, v);
    bits::reset(rv, u);
  }
}

std::size_t Graph::edge_count() const noexcept { return kernels::popcount(bits_) / 2; }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order_; ++u)
    bits::for_each(row(u), [&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
    });
  return out;
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InvalidArgument("vertex set contains a duplicate member");
}

VertexSet VertexSet::all(std::size_t order) {
  std::vector<Vertex> m(order);
  for (std::size_t i = 0; i < order; ++i) m[i] = static_cast<Vertex>(i);
  VertexSet s;
  s.members_ = std::move(m);
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::validate(std::size_t host_order) const {
  if (!members_.empty() && members_.back() >= host_order)
    throw InvalidArgument("vertex " + std::to_string(members_.back()) + " not in host of order " +
                          std::to_string(host_order));
}

std::vector<Word> VertexSet::to_bits(std::size_t host_order) const {
  validate(host_order);
  std::vector<Word> w(bits::words_for(host_order), 0);
  for (Vertex v : members_) bits::set(w, v);
  return w;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph duplicate_vertex(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw InvalidArgument("duplicate_vertex: vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(g.order()));
  const std::size_t n = g.order();
  Graph d(n + 1);
  for (auto [a, b] : g.edges()) d.add_edge(a, b);
  const auto twin = static_cast<Vertex>(n);
  bits::for_each(g.row(v), [&](std::size_t u) { d.add_edge(twin, static_cast<Vertex>(u)); });
  return d;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.validate(g.order());
  const auto& m = s.members();
  Graph h(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.adjacent(m[i], m[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

Graph relabel(const Graph& g, std::span<const Vertex> new_index) {
  const std::size_t n = g.order();
  if (new_index.size() != n) throw InvalidArgument("relabel: permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (Vertex x : new_index) {
    if (x >= n || seen[x]) throw InvalidArgument("relabel: not a permutation");
    seen[x] = true;
  }
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(new_index[u], new_index[v]);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.order() + b.order());
  for (auto [x, y] : a.edges()) u.add_edge(x, y);
  const auto off = static_cast<Vertex>(a.order());
  for (auto [x, y] : b.edges()) u.add_edge(x + off, y + off);
  return u;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("min_degree of the empty graph");
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

std::size_t max_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("max_degree of the empty graph");
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

Vertex min_degree_vertex(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("min_degree_vertex of the empty graph");
  Vertex best = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return best;
}

std::size_t degree_into_set(const Graph& g, Vertex v, const VertexSet& s) {
  if (v >= g.order()) throw InvalidArgument("degree_into_set: vertex out of range");
  const auto mask = s.to_bits(g.order());
  return kernels::and_popcount(g.row(v), mask);
}

namespace families {

Graph complete(std::size_t m) {
  Graph g(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(std::size_t n) { return Graph(n); }

Graph star(std::size_t m) {
  if (m == 0) throw InvalidArgument("star needs at least one vertex");
  Graph g(m);
  for (Vertex v = 1; v < m; ++v) g.add_edge(0, v);
  return g;
}

Graph path(std::size_t m) {
  Graph g(m);
  for (Vertex v = 1; v < m; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle(std::size_t m) {
  if (m < 3) throw InvalidArgument("cycle needs at least three vertices");
  Graph g = path(m);
  g.add_edge(0, static_cast<Vertex>(m - 1));
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

}  // namespace families

}  // namespace fullgraph
