#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fullgraph/error.hpp"
#include "fullgraph/graph.hpp"
#include "oracles.hpp"

using namespace fullgraph;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream f(std::string(FULLGRAPH_TEST_DATA) + "/" + name);
  std::string s;
  std::getline(f, s);
  return s;
}

std::size_t parse_offset(const std::string& text) {
  try {
    from_graph6(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("graph6 decodes reference strings") {
  const Graph k2 = from_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));
  const Graph k4 = from_graph6("C~");
  CHECK(k4 == families::complete(4));
  CHECK(from_graph6("D??") == families::empty(5));
  CHECK(from_graph6("@").order() == 1);
  CHECK(from_graph6(">>graph6<<A_") == k2);
}

TEST_CASE("graph6 encodes like the reference tool") {
  // expected strings produced by networkx
  CHECK(to_graph6(families::complete(2)) == "A_");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(families::path(4)) == "Ch");
  CHECK(to_graph6(families::cycle(5)) == "Dhc");
  CHECK(to_graph6(families::star(4)) == "Cs");
  Graph petersen(10);
  for (Vertex i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  CHECK(to_graph6(petersen) == "IheA@GUAo");
  CHECK(to_graph6(families::path(63)) == read_data("path63.g6"));
  CHECK(to_graph6(families::cycle(100)) == read_data("cycle100.g6"));
  CHECK(from_graph6(read_data("cycle100.g6")) == families::cycle(100));
}

TEST_CASE("graph6 errors carry byte offsets") {
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("A") == 1);           // truncated payload
  CHECK(parse_offset("A_?") == 2);         // trailing garbage
  CHECK(parse_offset("A\x20") == 1);       // byte out of range
  CHECK(parse_offset("A`") == 1);          // nonzero padding bits
  CHECK(parse_offset("~?") == 2);          // truncated size prefix
  CHECK(parse_offset("~~??") == 4);         // truncated long size prefix
}

TEST_CASE("graph6 round-trips random graphs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> order(0, 20);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, order(rng), 0.4);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  for (std::size_t n : {62, 63, 64, 65, 130, 258}) {
    const Graph g = oracle::random_graph(rng, n, 0.1);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge mutation validates endpoints") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  g.remove_edge(2, 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("complement") {
  CHECK(complement(families::complete(4)) == families::empty(4));
  const Graph c = complement(families::path(3));
  CHECK(c.edge_count() == 1);
  CHECK(c.adjacent(0, 2));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 12);
    CHECK(complement(complement(g)) == g);
    CHECK(min_degree(complement(g)) == g.order() - 1 - max_degree(g));
  }
}

TEST_CASE("false-twin duplication") {
  CHECK(duplicate_vertex(families::empty(3), 1) == families::empty(4));
  const Graph d = duplicate_vertex(families::complete(2), 0);
  CHECK(d.order() == 3);
  CHECK(d.adjacent(1, 2));
  CHECK_FALSE(d.adjacent(0, 2));
  CHECK(d.edge_count() == 2);
  CHECK_THROWS_AS(duplicate_vertex(d, 3), InvalidArgument);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 9);
    const Vertex v = static_cast<Vertex>(i % g.order());
    const Graph h = duplicate_vertex(g, v);
    REQUIRE(h.order() == g.order() + 1);
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = 0; b < g.order(); ++b)
        if (a != b) CHECK(h.adjacent(a, b) == g.adjacent(a, b));
    for (Vertex a = 0; a < g.order(); ++a) CHECK(h.adjacent(a, static_cast<Vertex>(g.order())) == g.adjacent(a, v));
  }
}

TEST_CASE("induced subgraphs relabel by ascending index") {
  CHECK(induced_subgraph(families::complete(5), VertexSet{0, 2, 4}) == families::complete(3));
  const Graph g = families::cycle(6);
  CHECK(induced_subgraph(g, VertexSet::all(6)) == g);
  CHECK(induced_subgraph(families::cycle(5), VertexSet{1, 2, 3}) == families::path(3));
  CHECK_THROWS_AS(induced_subgraph(g, VertexSet{1, 6}), InvalidArgument);
  CHECK_THROWS_AS(VertexSet(std::vector<Vertex>{2, 2}), InvalidArgument);
}

TEST_CASE("degrees") {
  CHECK(min_degree(families::complete(4)) == 3);
  CHECK(max_degree(families::complete(4)) == 3);
  CHECK(min_degree(families::star(4)) == 1);
  CHECK(max_degree(families::star(4)) == 3);
  const Graph u = disjoint_union(families::complete(2), Graph(1));
  CHECK(min_degree(u) == 0);
  CHECK(max_degree(u) == 1);
  CHECK_THROWS_AS(min_degree(Graph(0)), InvalidArgument);
  const Graph s = families::star(4);
  CHECK(degree_into_set(s, 0, VertexSet{1, 2, 3}) == 3);
  CHECK(degree_into_set(s, 1, VertexSet{}) == 0);
  CHECK(degree_into_set(s, 1, VertexSet{2, 3}) == 0);
  CHECK(min_degree_vertex(families::path(4)) == 0);
}

TEST_CASE("independence numbers are exact") {
  CHECK(independence_number(families::empty(5)) == 5);
  CHECK(independence_number(families::complete(5)) == 1);
  CHECK(independence_number(families::cycle(5)) == 2);
  CHECK(independence_number(Graph(0)) == 0);
  CHECK(alpha_with_vertex(families::star(4), 0) == 1);
  CHECK(alpha_with_vertex(families::star(4), 1) == 3);
  CHECK(alpha_with_vertex(families::empty(6), 4) == 6);
  CHECK_THROWS_AS(alpha_with_vertex(families::empty(3), 3), InvalidArgument);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 8, 0.2 + 0.1 * (i % 6));
    const std::size_t a = independence_number(g);
    CHECK(a == oracle::alpha(g));
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::size_t av = alpha_with_vertex(g, v);
      CHECK(av == oracle::alpha(g, static_cast<int>(v)));
      CHECK(av <= a);
      best = std::max(best, av);
    }
    CHECK(best == a);
  }
  // a larger instance: the Petersen-like circulant C(20; 1, 5)
  Graph c(20);
  for (Vertex i = 0; i < 20; ++i) {
    c.add_edge(i, (i + 1) % 20);
    c.add_edge(i, (i + 5) % 20);
  }
  CHECK(independence_number(c) == oracle::alpha(c));
}
