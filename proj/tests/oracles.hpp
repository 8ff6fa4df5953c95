#pragma once

// Brute-force reference implementations used to check the real ones.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fullgraph/graph.hpp"

namespace oracle {

using fullgraph::Graph;
using fullgraph::Vertex;

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline bool independent(const Graph& g, std::uint64_t mask) {
  for (Vertex u = 0; u < g.order(); ++u)
    if (mask >> u & 1U)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if ((mask >> v & 1U) && g.adjacent(u, v)) return false;
  return true;
}

inline std::size_t alpha(const Graph& g, int must = -1) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    if (must >= 0 && !(mask >> must & 1U)) continue;
    if (independent(g, mask)) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

// Upper-triangle bit string of g under the relabelling v -> perm[v].
inline std::string code_under(const Graph& g, const std::vector<Vertex>& perm) {
  const std::size_t n = g.order();
  std::vector<Vertex> inv(n);
  for (Vertex v = 0; v < n; ++v) inv[perm[v]] = v;
  std::string s;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) s.push_back(g.adjacent(inv[i], inv[j]) ? '1' : '0');
  return s;
}

// Smallest code over all n! relabellings.
inline std::string canonical(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::string best;
  bool first = true;
  do {
    std::string c = code_under(g, perm);
    if (first || c < best) best = std::move(c);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
  return true;
}

// orbit[v] = smallest vertex reachable from v by an automorphism.
inline std::vector<Vertex> orbits(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> orb(n);
  std::iota(orb.begin(), orb.end(), Vertex{0});
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    if (!is_automorphism(g, perm)) continue;
    for (Vertex v = 0; v < n; ++v) orb[perm[v]] = std::min(orb[perm[v]], v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // propagate to the orbit minimum
  for (std::size_t pass = 0; pass < n; ++pass)
    for (Vertex v = 0; v < n; ++v) orb[v] = orb[orb[v]];
  return orb;
}

// Does some subset S containing v (v < 0: any) induce a copy of pattern?
inline bool has_induced_copy(const Graph& host, const Graph& pattern, int v) {
  const std::size_t n = host.order(), k = pattern.order();
  if (k > n) return false;
  const std::string target = canonical(pattern);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    if (v >= 0 && !(mask >> v & 1U)) continue;
    std::vector<Vertex> members;
    for (Vertex u = 0; u < n; ++u)
      if (mask >> u & 1U) members.push_back(u);
    if (canonical(fullgraph::induced_subgraph(host, fullgraph::VertexSet(members))) == target) return true;
  }
  return false;
}

inline bool full(const Graph& host, const std::vector<Graph>& patterns) {
  for (const auto& p : patterns)
    for (Vertex v = 0; v < host.order(); ++v)
      if (!has_induced_copy(host, p, static_cast<int>(v))) return false;
  return true;
}

// Every labelled graph of order n, deduplicated by brute-force canonical code.
inline std::size_t count_classes(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::string> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    Graph g(n);
    std::size_t b = 0;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j, ++b)
        if (bits >> b & 1U) g.add_edge(i, j);
    seen.push_back(canonical(g));
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

}  // namespace oracle
