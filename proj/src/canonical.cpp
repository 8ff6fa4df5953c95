#include "fullgraph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "canon_dense.hpp"
#include "fullgraph/error.hpp"

namespace fullgraph::detail {
namespace {

using Perm = std::array<std::uint8_t, kDenseMax>;

// Ordered partition: lab holds the vertices, cend[s] is the end of the cell
// starting at s.
struct Partition {
  std::array<std::uint8_t, kDenseMax> lab;
  std::array<std::uint8_t, kDenseMax> cend;
};

class Canonizer {
 public:
  explicit Canonizer(const Dense& g) : g_(g), n_(g.n) {}

  DenseCanon run() {
    Partition root;
    for (int i = 0; i < n_; ++i) root.lab[i] = static_cast<std::uint8_t>(i);
    root.cend[0] = static_cast<std::uint8_t>(n_);
    refine(root, 0);
    search(root, 0);

    DenseCanon out;
    out.lab = best_lab_;
    out.code = best_code_;
    std::array<std::uint8_t, kDenseMax> parent{};
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(v);
    for (const auto& gen : gens_) unite_by(parent, gen);
    for (int v = 0; v < n_; ++v) out.orbit[v] = find(parent, static_cast<std::uint8_t>(v));
    return out;
  }

 private:
  static std::uint8_t find(std::array<std::uint8_t, kDenseMax>& p, std::uint8_t v) {
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
  }

  void unite_by(std::array<std::uint8_t, kDenseMax>& p, const Perm& gen) const {
    for (int v = 0; v < n_; ++v) {
      const auto a = find(p, static_cast<std::uint8_t>(v));
      const auto b = find(p, gen[v]);
      if (a != b) p[std::max(a, b)] = std::min(a, b);  // keep the smallest as root
    }
  }

  // Equitable refinement; splitters are processed first-in first-out by position.
  void refine(Partition& p, int first_splitter) const {
    std::array<std::uint8_t, kDenseMax> queue{};
    int head = 0, tail = 0;
    std::uint32_t queued = 0;
    auto push = [&](int s) {
      if (!(queued >> s & 1U)) {
        queued |= 1U << s;
        queue[tail++ % kDenseMax] = static_cast<std::uint8_t>(s);
      }
    };
    if (first_splitter < 0) {
      for (int s = 0; s < n_; s = p.cend[s]) push(s);
    } else {
      push(first_splitter);
    }

    std::array<std::uint8_t, kDenseMax> cnt{};
    while (head != tail) {
      const int ws = queue[head++ % kDenseMax];
      queued &= ~(1U << ws);
      std::uint32_t mask = 0;
      for (int i = ws; i < p.cend[ws]; ++i) mask |= 1U << p.lab[i];

      for (int cs = 0; cs < n_;) {
        const int ce = p.cend[cs];
        if (ce - cs == 1) {
          cs = ce;
          continue;
        }
        bool uniform = true;
        for (int i = cs; i < ce; ++i) {
          cnt[i] = static_cast<std::uint8_t>(std::popcount(g_.row[p.lab[i]] & mask));
          uniform = uniform && cnt[i] == cnt[cs];
        }
        if (uniform) {
          cs = ce;
          continue;
        }
        // insertion sort by count, ascending
        for (int i = cs + 1; i < ce; ++i) {
          const auto v = p.lab[i];
          const auto c = cnt[i];
          int j = i - 1;
          while (j >= cs && cnt[j] > c) {
            p.lab[j + 1] = p.lab[j];
            cnt[j + 1] = cnt[j];
            --j;
          }
          p.lab[j + 1] = v;
          cnt[j + 1] = c;
        }
        int start = cs;
        for (int i = cs + 1; i <= ce; ++i) {
          if (i == ce || cnt[i] != cnt[start]) {
            p.cend[start] = static_cast<std::uint8_t>(i);
            push(start);
            start = i;
          }
        }
        cs = ce;
      }
    }
  }

  Code leaf_code(const Partition& p) const {
    std::array<std::uint8_t, kDenseMax> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<std::uint8_t>(i);
    Code c{};
    for (int i = 0; i < n_; ++i) {
      std::uint32_t r = g_.row[p.lab[i]], out = 0;
      while (r) {
        out |= 1U << pos[std::countr_zero(r)];
        r &= r - 1;
      }
      c[i] = out;
    }
    return c;
  }

  static int compare(const Code& a, const Code& b, int n) {
    for (int i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static int common_prefix(const Perm& a, const Perm& b, int len) {
    int i = 0;
    while (i < len && a[i] == b[i]) ++i;
    return i;
  }

  void add_generator(const Perm& from, const Perm& to) {
    Perm gen{};
    for (int i = 0; i < n_; ++i) gen[from[i]] = to[i];
    gens_.push_back(gen);
  }

  // Returns the level to resume at; a value below `level` unwinds the caller.
  int search(const Partition& p, int level) {
    int cs = 0;
    while (cs < n_ && p.cend[cs] - cs == 1) cs = p.cend[cs];
    if (cs == n_) return leaf(p, level);

    const int ce = p.cend[cs];
    std::array<std::uint8_t, kDenseMax> children{};
    const int nc = ce - cs;
    for (int i = 0; i < nc; ++i) children[i] = p.lab[cs + i];
    std::sort(children.begin(), children.begin() + nc);

    std::uint32_t explored = 0;
    for (int ci = 0; ci < nc; ++ci) {
      const std::uint8_t v = children[ci];
      if (explored && equivalent_to_explored(v, explored, level)) continue;
      explored |= 1U << v;

      Partition q = p;
      for (int i = cs; i < ce; ++i)
        if (q.lab[i] == v) {
          std::swap(q.lab[i], q.lab[cs]);
          break;
        }
      q.cend[cs] = static_cast<std::uint8_t>(cs + 1);
      q.cend[cs + 1] = static_cast<std::uint8_t>(ce);
      path_[level] = v;
      refine(q, cs);
      const int back = search(q, level + 1);
      if (back < level) return back;
    }
    return level;
  }

  // Is v in the orbit of an explored sibling under generators fixing the path so far?
  bool equivalent_to_explored(std::uint8_t v, std::uint32_t explored, int level) {
    std::array<std::uint8_t, kDenseMax> parent{};
    for (int u = 0; u < n_; ++u) parent[u] = static_cast<std::uint8_t>(u);
    bool any = false;
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = gen[path_[i]] == path_[i];
      if (!fixes) continue;
      unite_by(parent, gen);
      any = true;
    }
    if (!any) return false;
    const auto rv = find(parent, v);
    for (std::uint32_t e = explored; e; e &= e - 1)
      if (find(parent, static_cast<std::uint8_t>(std::countr_zero(e))) == rv) return true;
    return false;
  }

  int leaf(const Partition& p, int level) {
    const Code c = leaf_code(p);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = c;
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path_;
      return level;
    }
    if (compare(c, first_code_, n_) == 0) {
      add_generator(first_lab_, p.lab);
      return common_prefix(path_, first_path_, level);
    }
    const int cmp = compare(c, best_code_, n_);
    if (cmp == 0) {
      add_generator(best_lab_, p.lab);
      return common_prefix(path_, best_path_, level);
    }
    if (cmp > 0) {
      best_code_ = c;
      best_lab_ = p.lab;
      best_path_ = path_;
    }
    return level;
  }

  const Dense& g_;
  int n_;
  Perm path_{};
  bool have_first_ = false;
  Code first_code_{}, best_code_{};
  Perm first_lab_{}, best_lab_{};
  Perm first_path_{}, best_path_{};
  std::vector<Perm> gens_;
};

}  // namespace

DenseCanon canonicalize(const Dense& g) {
  if (g.n == 0) return {};
  Canonizer c(g);
  return c.run();
}

Dense apply_labeling(const Dense& g, const std::array<std::uint8_t, kDenseMax>& lab) {
  std::array<std::uint8_t, kDenseMax> pos{};
  for (int i = 0; i < g.n; ++i) pos[lab[i]] = static_cast<std::uint8_t>(i);
  Dense out;
  out.n = g.n;
  for (int i = 0; i < g.n; ++i) {
    std::uint32_t r = g.row[lab[i]], nr = 0;
    while (r) {
      nr |= 1U << pos[std::countr_zero(r)];
      r &= r - 1;
    }
    out.row[i] = nr;
  }
  return out;
}

Dense remove_vertex(const Dense& g, int v) {
  Dense out;
  out.n = g.n - 1;
  const std::uint32_t low = (1U << v) - 1;
  for (int i = 0, k = 0; i < g.n; ++i) {
    if (i == v) continue;
    const std::uint32_t r = g.row[i];
    out.row[k++] = (r & low) | ((r >> 1) & ~low);
  }
  return out;
}

}  // namespace fullgraph::detail

namespace fullgraph {
namespace {

detail::Dense to_dense(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw UnsupportedOrder("canonical labelling supports order <= " + std::to_string(kMaxCanonicalOrder) + ", got " +
                           std::to_string(g.order()));
  detail::Dense d;
  d.n = static_cast<int>(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.row[v] = static_cast<std::uint32_t>(g.row(v)[0]);
  return d;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const detail::Dense d = to_dense(g);
  const detail::DenseCanon c = detail::canonicalize(d);
  CanonicalLabeling out;
  for (int i = 0; i < d.n; ++i) {
    out.positions.push_back(c.lab[i]);
    out.orbit.push_back(c.orbit[i]);
  }
  return out;
}

Graph canonical_graph(const Graph& g) {
  const CanonicalLabeling c = canonical_labeling(g);
  std::vector<Vertex> new_index(g.order());
  for (std::size_t i = 0; i < c.positions.size(); ++i) new_index[c.positions[i]] = static_cast<Vertex>(i);
  return relabel(g, new_index);
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace fullgraph
