#include "fullgraph/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "fullgraph/bounds.hpp"
#include "fullgraph/error.hpp"

namespace fullgraph {
namespace {

using nlohmann::ordered_json;

// Records every vertex pair a rule constrains, edge or non-edge, and refuses
// a second decision on the same pair.
class PairLedger {
 public:
  explicit PairLedger(std::size_t n) : n_(n), seen_(n * n, false) {}

  void decide(Graph& g, Vertex u, Vertex v, bool edge, const char* rule) {
    const std::size_t a = std::min(u, v), b = std::max(u, v);
    if (seen_[a * n_ + b])
      throw InternalError(std::string("pair {") + std::to_string(a) + "," + std::to_string(b) + "} decided twice (" +
                          rule + ")");
    seen_[a * n_ + b] = true;
    if (edge) g.add_edge(u, v);
  }

 private:
  std::size_t n_;
  std::vector<bool> seen_;
};

std::vector<Vertex> neighbours(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.adjacent(u, v)) out.push_back(u);
  return out;
}

std::vector<Vertex> all_but(std::size_t n, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n; ++u)
    if (u != v) out.push_back(u);
  return out;
}

}  // namespace

std::string_view to_string(TheoremTag tag) noexcept {
  switch (tag) {
    case TheoremTag::cyclic: return "cyclic";
    case TheoremTag::design: return "design";
    case TheoremTag::h_vs_empty: return "h_vs_empty";
    case TheoremTag::star: return "star";
    case TheoremTag::complete_bipartite: return "complete_bipartite";
    case TheoremTag::delta_zero: return "delta_zero";
  }
  return "unknown";
}

TheoremTag theorem_tag_from_string(std::string_view name) {
  for (auto t : {TheoremTag::cyclic, TheoremTag::design, TheoremTag::h_vs_empty, TheoremTag::star,
                 TheoremTag::complete_bipartite, TheoremTag::delta_zero})
    if (to_string(t) == name) return t;
  throw InvalidArgument("unknown construction '" + std::string(name) + "'");
}

Construction cyclic_full(std::span<const Graph> patterns) {
  if (patterns.empty()) throw InvalidArgument("cyclic construction needs at least one pattern");
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].order() == 0) throw InvalidArgument("pattern " + std::to_string(i + 1) + " has order 0");
    if (patterns[i].order() == 1)
      throw InvalidArgument("pattern " + std::to_string(i + 1) + " is K1; drop it, every vertex covers it");
  }
  const std::size_t k = patterns.size();

  struct Block {
    std::size_t pattern;
    Vertex distinguished;
    std::size_t offset;
    std::size_t size;
    std::vector<Vertex> nbhd;  // host vertices
  };
  std::vector<Block> blocks;
  std::size_t order = 0;
  for (std::size_t r = 0; r < 2 * k; ++r) {
    const Graph& h = patterns[r % k];
    Block b{r % k, min_degree_vertex(h), order, h.order() - 1, {}};
    for (Vertex u : neighbours(h, b.distinguished))
      b.nbhd.push_back(static_cast<Vertex>(order + (u > b.distinguished ? u - 1 : u)));
    order += b.size;
    blocks.push_back(std::move(b));
  }

  Graph g(order);
  for (const auto& b : blocks) {
    const Graph rest = induced_subgraph(patterns[b.pattern], VertexSet(all_but(patterns[b.pattern].order(), b.distinguished)));
    for (auto [u, v] : rest.edges()) g.add_edge(static_cast<Vertex>(b.offset + u), static_cast<Vertex>(b.offset + v));
  }

  auto join = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = 0; i < blocks[from].size; ++i)
      for (Vertex w : blocks[to].nbhd) g.add_edge(static_cast<Vertex>(blocks[from].offset + i), w);
  };
  ordered_json joins = ordered_json::array();
  if (k == 1) {
    // Only one direction, or pairs in both neighbourhoods would be constrained twice.
    join(0, 1);
    joins.push_back({0, 1});
  } else {
    for (std::size_t r = 0; r < 2 * k; ++r)
      for (std::size_t j = 1; j < k; ++j) {
        join(r, (r + j) % (2 * k));
        joins.push_back({r, (r + j) % (2 * k)});
      }
  }

  ConstructionRecipe rec;
  rec.theorem_tag = TheoremTag::cyclic;
  rec.parameters["k"] = k;
  ordered_json jb = ordered_json::array();
  for (const auto& b : blocks)
    jb.push_back({{"pattern", b.pattern}, {"distinguished_vertex", b.distinguished}, {"first", b.offset},
                  {"size", b.size}, {"neighbourhood", b.nbhd}});
  rec.parameters["blocks"] = std::move(jb);
  rec.parameters["joins"] = std::move(joins);
  rec.claimed_order = order;
  if (static_cast<bounds::Value>(order) != bounds::cyclic_upper(patterns))
    throw InternalError("cyclic construction order disagrees with 2*sum(n_i - 1)");
  return {std::move(g), std::move(rec)};
}

Construction design_full(std::span<const Graph> patterns, const ResolvableDesign& d) {
  if (patterns.empty()) throw InvalidArgument("design construction needs at least one pattern");
  const DesignReport report = validate_design(d);
  if (!report.valid())
    throw InvalidArgument("invalid design: " + std::string(to_string(report.issues.front().kind)) + ": " +
                          report.issues.front().detail);
  if (patterns.size() > d.classes.size())
    throw InvalidArgument("t = " + std::to_string(patterns.size()) + " patterns exceed the " +
                          std::to_string(d.classes.size()) + " parallel classes");
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].order() == 0) throw InvalidArgument("pattern " + std::to_string(i + 1) + " has order 0");
    if (patterns[i].order() > d.block_size)
      throw InvalidArgument("pattern " + std::to_string(i + 1) + " has order " + std::to_string(patterns[i].order()) +
                            " > block size " + std::to_string(d.block_size));
  }

  Graph g(d.point_count);
  PairLedger ledger(d.point_count);
  ordered_json jp = ordered_json::array();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    Graph padded = patterns[i];
    while (padded.order() < d.block_size) padded = duplicate_vertex(padded, 0);
    for (const auto& block : d.classes[i]) {
      const auto& pts = block.members();
      for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
          ledger.decide(g, pts[a], pts[b], padded.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)), "block");
    }
    jp.push_back({{"pattern", i}, {"class", i}, {"original_order", patterns[i].order()},
                  {"duplicates_of_vertex_0", d.block_size - patterns[i].order()}, {"padded_g6", to_graph6(padded)}});
  }

  ConstructionRecipe rec;
  rec.theorem_tag = TheoremTag::design;
  rec.parameters["t"] = patterns.size();
  rec.parameters["points"] = d.point_count;
  rec.parameters["block_size"] = d.block_size;
  rec.parameters["classes_available"] = d.classes.size();
  rec.parameters["assignments"] = std::move(jp);
  rec.claimed_order = d.point_count;
  return {std::move(g), std::move(rec)};
}

Construction h_vs_empty(const Graph& h, std::size_t n, std::optional<std::size_t> r_opt) {
  if (h.order() == 0) throw InvalidArgument("pattern has order 0");
  const std::size_t delta = min_degree(h);
  if (delta == 0) throw InvalidArgument("minimum degree 0: use the delta_zero construction");
  const Vertex x = min_degree_vertex(h);
  const std::vector<Vertex> nbrs = neighbours(h, x);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < h.order(); ++v)
    if (v != x && !h.adjacent(v, x)) rest.push_back(v);
  const std::size_t mp = rest.size();
  const bounds::HvsEmptyPlan plan = bounds::plan_h_vs_empty(n, delta, mp, r_opt);
  const std::size_t r = plan.r, s = plan.s;

  // U_1..U_r first, then W_1..W_r.
  auto u = [&](std::size_t i, std::size_t l) { return static_cast<Vertex>(i * delta + l); };
  std::vector<std::size_t> wsize(r);
  const std::size_t base = n / (r - 1), extra = n % (r - 1);
  for (std::size_t i = 0; i + 1 < r; ++i) wsize[i] = base + (i < extra ? 1 : 0);
  wsize[r - 1] = s - 1;
  std::vector<std::size_t> wfirst(r);
  std::size_t next = r * delta;
  for (std::size_t i = 0; i < r; ++i) {
    wfirst[i] = next;
    next += wsize[i];
  }
  const std::size_t order = next;
  if (order != static_cast<std::size_t>(plan.order)) throw InternalError("h_vs_empty layout disagrees with its plan");

  Graph g(order);
  PairLedger ledger(order);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t a = 0; a < delta; ++a)
      for (std::size_t b = a + 1; b < delta; ++b) ledger.decide(g, u(i, a), u(i, b), h.adjacent(nbrs[a], nbrs[b]), "U_i");
    for (std::size_t a = 0; a < delta; ++a)
      for (std::size_t w = 0; w < wsize[i]; ++w) ledger.decide(g, u(i, a), static_cast<Vertex>(wfirst[i] + w), true, "U_i-W_i");
  }

  // T[j][c] is the lowest vertex of U_{j*m'+c} and plays rest[c].
  std::vector<std::vector<Vertex>> T(3);
  for (std::size_t j = 0; j < 3 && mp > 0; ++j)
    for (std::size_t c = 0; c < mp; ++c) T[j].push_back(u(j * mp + c, 0));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t a = 0; a < T[j].size(); ++a)
      for (std::size_t b = a + 1; b < T[j].size(); ++b) ledger.decide(g, T[j][a], T[j][b], h.adjacent(rest[a], rest[b]), "T_j");

  std::vector<std::size_t> target(r, 0);
  if (mp > 0) {
    for (std::size_t i = 0; i < r; ++i) {
      target[i] = i < 3 * mp ? (i / mp + 1) % 3 : 0;
      for (std::size_t l = 0; l < delta; ++l)
        for (std::size_t c = 0; c < mp; ++c)
          ledger.decide(g, u(i, l), T[target[i]][c], h.adjacent(nbrs[l], rest[c]), "U_i-T_j");
    }
  }

  ConstructionRecipe rec;
  rec.theorem_tag = TheoremTag::h_vs_empty;
  auto& p = rec.parameters;
  p["n"] = n;
  p["m"] = h.order();
  p["delta"] = delta;
  p["m_prime"] = mp;
  p["x"] = x;
  p["neighbourhood_roles"] = nbrs;
  p["outside_roles"] = rest;
  p["r"] = r;
  p["r_rule"] = plan.r_rule;
  p["s"] = s;
  ordered_json ju = ordered_json::array(), jw = ordered_json::array();
  for (std::size_t i = 0; i < r; ++i) {
    ju.push_back({u(i, 0), u(i, 0) + delta});
    jw.push_back({wfirst[i], wfirst[i] + wsize[i]});
  }
  p["U"] = std::move(ju);
  p["W"] = std::move(jw);
  p["W_sizes"] = wsize;
  p["T"] = T;
  if (mp > 0) p["U_to_T"] = target;
  rec.claimed_order = order;
  return {std::move(g), std::move(rec)};
}

Construction star_full(std::size_t m, std::size_t n, std::optional<std::size_t> k_opt) {
  if (m < 2) throw InvalidArgument("star construction needs m >= 2");
  if (n < m) throw InvalidArgument("n < m: use the complete_bipartite construction");
  const std::size_t k = k_opt ? *k_opt : bounds::star_upper(m, n).k;
  if (k < 1 || k > n - 1)
    throw InvalidArgument("k = " + std::to_string(k) + " violates 1 <= k <= n-1 = " + std::to_string(n - 1));

  const auto ki = static_cast<std::int64_t>(k);
  const std::int64_t rm1 = std::max<std::int64_t>((static_cast<std::int64_t>(n) - 1 + ki - 1) / ki,
                                                  2 * static_cast<std::int64_t>(m) - 3 - 2 * ki);
  const auto r = static_cast<std::size_t>(rm1 + 1);
  const std::size_t left = (r + 1) / 2, right = r - left;
  const std::size_t ysize = n - 1 + k;
  if ((r - 1) * k < n - 1) throw InternalError("star construction violates (r-1)k >= n-1");
  if (r * k < ysize) throw InternalError("star construction leaves Y vertices without neighbours");

  std::size_t pl = std::max(k, std::min(left * k, (ysize * left + r - 1) / r));
  if (ysize - pl < k) pl = ysize - k;
  const std::size_t pr = ysize - pl;
  if (pl < k || pl > left * k || pr < k || pr > right * k)
    throw InvalidArgument("k = " + std::to_string(k) + " admits no bipartite Y split (pools " + std::to_string(pl) + "/" +
                          std::to_string(pr) + ")");

  const std::size_t order = r + ysize;
  Graph g(order);
  for (std::size_t a = 0; a < left; ++a)
    for (std::size_t b = left; b < r; ++b) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t t = 0; t < k; ++t) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(r + (i * k + t) % pl));
  for (std::size_t i = 0; i < right; ++i)
    for (std::size_t t = 0; t < k; ++t)
      g.add_edge(static_cast<Vertex>(left + i), static_cast<Vertex>(r + pl + (i * k + t) % pr));
  for (std::size_t y = r; y < order; ++y)
    if (g.degree(static_cast<Vertex>(y)) == 0) throw InternalError("isolated Y vertex " + std::to_string(y));

  ConstructionRecipe rec;
  rec.theorem_tag = TheoremTag::star;
  auto& p = rec.parameters;
  p["m"] = m;
  p["n"] = n;
  p["k"] = k;
  p["r"] = r;
  p["X_left"] = {0, left};
  p["X_right"] = {left, r};
  p["Y"] = {r, order};
  p["Y_left_pool"] = {r, r + pl};
  p["Y_right_pool"] = {r + pl, order};
  p["schedule"] = "vertex i of a side takes pool[(i*k + t) mod |pool|], t < k";
  rec.claimed_order = order;
  return {std::move(g), std::move(rec)};
}

Construction complete_bipartite_full(std::size_t m, std::size_t n) {
  if (n < 2) throw InvalidArgument("complete_bipartite construction needs n >= 2");
  if (n >= m) throw InvalidArgument("complete_bipartite construction needs n < m (got n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m) + "); use the star construction");
  ConstructionRecipe rec;
  rec.theorem_tag = TheoremTag::complete_bipartite;
  rec.parameters["m"] = m;
  rec.parameters["n"] = n;
  rec.parameters["sides"] = {n, m - 1};
  rec.claimed_order = n + m - 1;
  return {families::complete_bipartite(n, m - 1), std::move(rec)};
}

Construction delta_zero_construction(const Graph& h, std::size_t n) {
  if (h.order() == 0) throw InvalidArgument("pattern has order 0");
  if (min_degree(h) != 0) throw InvalidArgument("delta_zero construction needs a pattern with an isolated vertex");
  const std::size_t s = bounds::min_alpha_with_vertex(h);
  if (n < s) throw InvalidArgument("n = " + std::to_string(n) + " violates n >= s = " + std::to_string(s));
  ConstructionRecipe rec;
  rec.theorem_tag = TheoremTag::delta_zero;
  rec.parameters["n"] = n;
  rec.parameters["m"] = h.order();
  rec.parameters["s"] = s;
  rec.parameters["isolated_added"] = n - s;
  rec.claimed_order = h.order() + n - s;
  return {disjoint_union(h, families::empty(n - s)), std::move(rec)};
}

}  // namespace fullgraph
