#include "fullgraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>

#include "canon_dense.hpp"
#include "fullgraph/error.hpp"

namespace fullgraph {
namespace {

using detail::Dense;

constexpr std::size_t kKnownCounts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
constexpr std::size_t kMemoisedOrder = 8;
constexpr std::size_t kParentsPerTask = 16;
constexpr std::size_t kParentsPerBatch = 1024;
constexpr std::size_t kGraphsPerBatch = 4096;

void check_order(std::size_t order) {
  if (order > kMaxEnumerationOrder)
    throw UnsupportedOrder("exhaustive enumeration is capped at order " + std::to_string(kMaxEnumerationOrder) +
                           ", got " + std::to_string(order));
}

unsigned thread_count(const EnumerateOptions& o) {
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  return o.threads ? o.threads : hw;
}

std::uint64_t pack(const detail::Code& c, int n) {
  std::uint64_t out = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) out |= static_cast<std::uint64_t>(c[i] >> j & 1U) << bit;
  return out;
}

// Children of a canonical parent whose canonical deletion vertex is the new one.
void extend(const Dense& parent, std::vector<Dense>& out) {
  const int n = parent.n + 1;
  const int last = n - 1;
  std::vector<std::uint64_t> seen;
  for (std::uint32_t mask = 0; mask < (1U << last); ++mask) {
    const int dnew = std::popcount(mask);
    bool minimal = true;
    for (int i = 0; i < last && minimal; ++i)
      minimal = std::popcount(parent.row[i]) + static_cast<int>(mask >> i & 1U) >= dnew;
    if (!minimal) continue;

    Dense child = parent;
    child.n = n;
    for (int i = 0; i < last; ++i)
      if (mask >> i & 1U) child.row[i] |= 1U << last;
    child.row[last] = mask;

    const detail::DenseCanon c = detail::canonicalize(child);
    const int w = c.lab[0];
    bool accept = w == last || c.orbit[w] == c.orbit[last];
    if (!accept) {
      const detail::DenseCanon pc = detail::canonicalize(detail::remove_vertex(child, w));
      accept = detail::code_equal(pc.code, parent.row, parent.n);
    }
    if (!accept) continue;
    const std::uint64_t key = pack(c.code, n);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    Dense rep;
    rep.n = n;
    rep.row = c.code;
    out.push_back(rep);
  }
}

std::vector<Dense> extend_all(std::span<const Dense> parents, unsigned threads) {
  const std::size_t tasks = (parents.size() + kParentsPerTask - 1) / kParentsPerTask;
  std::vector<std::vector<Dense>> results(tasks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks;) {
      const std::size_t end = std::min(parents.size(), (t + 1) * kParentsPerTask);
      for (std::size_t p = t * kParentsPerTask; p < end; ++p) extend(parents[p], results[t]);
    }
  };
  const unsigned nt = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks, 1)));
  if (nt <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < nt; ++i) pool.emplace_back(work);
  }
  std::vector<Dense> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

class Memo {
 public:
  const std::vector<Dense>& level(std::size_t order, unsigned threads) {
    std::lock_guard lock(mu_);
    if (levels_.empty()) {
      levels_.push_back({Dense{}});
      Dense k1;
      k1.n = 1;
      levels_.push_back({k1});
    }
    while (levels_.size() <= order) levels_.push_back(extend_all(levels_.back(), threads));
    return levels_[order];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Dense>> levels_;
};

Memo& memo() {
  static Memo m;
  return m;
}

Graph to_graph(const Dense& d) {
  Graph g(static_cast<std::size_t>(d.n));
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j)
      if (d.row[i] >> j & 1U) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

void emit(std::span<const Dense> reps, const std::function<void(std::span<const Graph>)>& fn) {
  for (std::size_t at = 0; at < reps.size(); at += kGraphsPerBatch) {
    const std::size_t end = std::min(reps.size(), at + kGraphsPerBatch);
    std::vector<Graph> batch;
    batch.reserve(end - at);
    for (std::size_t i = at; i < end; ++i) batch.push_back(to_graph(reps[i]));
    fn(batch);
  }
}

}  // namespace

std::size_t known_graph_count(std::size_t order) {
  check_order(order);
  return kKnownCounts[order];
}

void for_each_graph_batch(std::size_t order, const std::function<void(std::span<const Graph>)>& fn,
                          const EnumerateOptions& options) {
  check_order(order);
  const unsigned threads = thread_count(options);
  if (order <= kMemoisedOrder) {
    emit(memo().level(order, threads), fn);
    return;
  }
  const std::vector<Dense>& parents = memo().level(order - 1, threads);
  for (std::size_t at = 0; at < parents.size(); at += kParentsPerBatch) {
    const std::size_t end = std::min(parents.size(), at + kParentsPerBatch);
    const std::vector<Dense> reps = extend_all(std::span(parents).subspan(at, end - at), threads);
    emit(reps, fn);
  }
}

std::vector<Graph> enumerate_graphs(std::size_t order, const EnumerateOptions& options) {
  std::vector<Graph> out;
  for_each_graph_batch(order, [&](std::span<const Graph> b) { out.insert(out.end(), b.begin(), b.end()); }, options);
  return out;
}

std::size_t count_graphs(std::size_t order, const EnumerateOptions& options) {
  std::size_t total = 0;
  for_each_graph_batch(order, [&](std::span<const Graph> b) { total += b.size(); }, options);
  return total;
}

}  // namespace fullgraph
