#include <doctest.h>

#include <numeric>
#include <random>

#include "fullgraph/canonical.hpp"
#include "fullgraph/error.hpp"
#include "oracles.hpp"

using namespace fullgraph;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST_CASE("canonical forms of small examples") {
  std::vector<Vertex> perm{0, 1, 2, 3};
  const std::string p4 = canonical_form(families::path(4));
  const std::string k4 = canonical_form(families::complete(4));
  do {
    CHECK(canonical_form(relabel(families::path(4), perm)) == p4);
    CHECK(canonical_form(relabel(families::complete(4), perm)) == k4);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(p4 != canonical_form(families::star(4)));
  CHECK(canonical_form(Graph(0)) == "?");
  CHECK(canonical_form(Graph(1)) == "@");
  CHECK_THROWS_AS(canonical_form(Graph(17)), UnsupportedOrder);
  CHECK_NOTHROW(canonical_form(Graph(16)));
}

TEST_CASE("canonical labelling separates exactly the isomorphism classes") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 7);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    CHECK(isomorphic(a, b) == (oracle::canonical(a) == oracle::canonical(b)));
    CHECK(isomorphic(a, shuffled(a, rng)));
  }
}

TEST_CASE("canonical graph is a relabelling and orbits match brute force") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 7);
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (i % 7));
    const CanonicalLabeling l = canonical_labeling(g);
    std::vector<Vertex> sorted = l.positions;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v = 0; v < n; ++v) CHECK(sorted[v] == v);
    const Graph c = canonical_graph(g);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (a != b) CHECK(c.adjacent(a, b) == g.adjacent(l.positions[a], l.positions[b]));
    CHECK(l.orbit == oracle::orbits(g));
    CHECK(canonical_graph(shuffled(g, rng)) == c);
  }
}

TEST_CASE("highly symmetric and larger graphs") {
  std::mt19937_64 rng(29);
  Graph petersen(10);
  for (Vertex i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  const CanonicalLabeling pl = canonical_labeling(petersen);
  for (Vertex v = 0; v < 10; ++v) CHECK(pl.orbit[v] == 0);
  for (const Graph& g : {petersen, families::cycle(16), families::complete_bipartite(8, 8), families::empty(16),
                         disjoint_union(families::cycle(7), families::cycle(7)), oracle::random_graph(rng, 16, 0.5)})
    for (int t = 0; t < 5; ++t) CHECK(canonical_form(shuffled(g, rng)) == canonical_form(g));
  CHECK_FALSE(isomorphic(families::cycle(14), disjoint_union(families::cycle(7), families::cycle(7))));
  CHECK_FALSE(isomorphic(families::path(4), families::path(5)));
}
