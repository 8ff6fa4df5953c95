// Exact maximum independent set: maximum clique in the complement, searched
// with greedy colouring bounds (colour classes are cliques of g, each of
// which meets an independent set at most once).

#include <algorithm>
#include <string>
#include <vector>

#include "fullgraph/error.hpp"
#include "fullgraph/graph.hpp"

namespace fullgraph {
namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g), words_(g.words_per_row()), non_adj_(g.order()) {
    const auto all = bits::full(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      non_adj_[v] = all;
      kernels::andnot_into(non_adj_[v], g.row(v));
      bits::reset(non_adj_[v], v);
    }
  }

  std::size_t solve(std::vector<Word> candidates, std::size_t base) {
    best_ = base;
    if (!bits::none(candidates)) expand(candidates, base);
    return best_;
  }

  std::span<const Word> non_adjacent(Vertex v) const { return non_adj_[v]; }

 private:
  void expand(std::vector<Word>& p, std::size_t size) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    colour_classes(p, order, colour);
    std::vector<Word> next(words_);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      const Vertex v = order[i];
      std::copy(p.begin(), p.end(), next.begin());
      kernels::and_into(next, non_adj_[v]);
      if (bits::none(next)) {
        best_ = std::max(best_, size + 1);
      } else {
        std::vector<Word> sub = next;
        expand(sub, size + 1);
      }
      bits::reset(p, v);
    }
  }

  void colour_classes(const std::vector<Word>& p, std::vector<Vertex>& order, std::vector<std::size_t>& colour) const {
    std::vector<Word> uncoloured = p;
    std::vector<Word> q(words_);
    std::size_t c = 0;
    while (!bits::none(uncoloured)) {
      ++c;
      q = uncoloured;
      while (!bits::none(q)) {
        const auto v = static_cast<Vertex>(bits::first(q));
        bits::reset(uncoloured, v);
        bits::reset(q, v);
        kernels::and_into(q, g_.row(v));
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  const Graph& g_;
  std::size_t words_;
  std::vector<std::vector<Word>> non_adj_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t independence_number(const Graph& g) {
  if (g.order() == 0) return 0;
  IndependentSetSearch search(g);
  return search.solve(bits::full(g.order()), 0);
}

std::size_t alpha_with_vertex(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw InvalidArgument("alpha_with_vertex: vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(g.order()));
  IndependentSetSearch search(g);
  const auto rest = search.non_adjacent(v);
  return search.solve(std::vector<Word>(rest.begin(), rest.end()), 1);
}

}  // namespace fullgraph
