#include "fullgraph/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "fullgraph/canonical.hpp"
#include "fullgraph/constructions.hpp"
#include "fullgraph/enumerate.hpp"
#include "fullgraph/error.hpp"
#include "fullgraph/verifier.hpp"

namespace fullgraph {
namespace {

using nlohmann::json;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::filesystem::path cache_file(const std::filesystem::path& dir) { return dir / "oracle.jsonl"; }

std::optional<SearchResult> cache_lookup(const std::filesystem::path& dir, const std::string& key) {
  std::lock_guard lock(cache_mutex());
  std::ifstream in(cache_file(dir));
  if (!in) return std::nullopt;
  std::optional<json> hit;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("key") || j["key"] != key) continue;
    hit = std::move(j);  // last write wins
  }
  if (!hit) return std::nullopt;
  try {
    SearchResult r;
    const json& j = *hit;
    if (!j["f"].is_null()) r.f = j["f"].get<std::size_t>();
    if (!j["witness_g6"].is_null()) r.witness_g6 = j["witness_g6"].get<std::string>();
    r.exhausted_orders = j["exhausted_orders"].get<std::vector<std::size_t>>();
    for (auto it = j["counts"].begin(); it != j["counts"].end(); ++it)
      r.counts[std::stoul(it.key())] = it.value().get<std::size_t>();
    r.exact = j.value("exact", false);
    r.upper_bound_only = j.value("upper_bound_only", false);
    r.from_cache = true;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // malformed entry: recompute
  }
}

void cache_store(const std::filesystem::path& dir, const std::string& key, const SearchResult& r) {
  json j;
  j["key"] = key;
  j["f"] = r.f ? json(*r.f) : json(nullptr);
  j["witness_g6"] = r.witness_g6 ? json(*r.witness_g6) : json(nullptr);
  j["exhausted_orders"] = r.exhausted_orders;
  json counts = json::object();
  for (auto [order, c] : r.counts) counts[std::to_string(order)] = c;
  j["counts"] = std::move(counts);
  j["exact"] = r.exact;
  j["upper_bound_only"] = r.upper_bound_only;
  std::lock_guard lock(cache_mutex());
  std::filesystem::create_directories(dir);
  std::ofstream out(cache_file(dir), std::ios::app);
  if (!out) throw Error("cannot write oracle cache in " + dir.string());
  out << j.dump() + "\n" << std::flush;
}

bool passes(const Graph& host, std::span<const Graph> patterns) {
  for (const auto& p : patterns)
    if (!find_induced_copy(host, p)) return false;
  return is_full(host, patterns).verdict;
}

// Full graphs among all graphs of one order, as graph6 strings.
std::vector<std::string> scan_order(std::size_t order, std::span<const Graph> patterns, unsigned threads,
                                    std::size_t& examined) {
  std::vector<std::string> found;
  std::mutex mu;
  EnumerateOptions eo;
  eo.threads = threads;
  for_each_graph_batch(
      order,
      [&](std::span<const Graph> batch) {
        examined += batch.size();
        std::atomic<std::size_t> next{0};
        auto work = [&] {
          std::vector<std::string> local;
          for (std::size_t i; (i = next.fetch_add(1)) < batch.size();)
            if (passes(batch[i], patterns)) local.push_back(to_graph6(batch[i]));
          std::lock_guard lock(mu);
          found.insert(found.end(), local.begin(), local.end());
        };
        const unsigned nt = static_cast<unsigned>(std::min<std::size_t>(threads, batch.size()));
        if (nt <= 1) {
          work();
        } else {
          std::vector<std::jthread> pool;
          for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work);
        }
      },
      eo);
  return found;
}

// Beyond the enumeration cap: a construction, padded by false twins up to `at_least`.
Graph fallback_witness(std::span<const Graph> patterns, std::size_t at_least) {
  std::vector<Graph> reduced;
  for (const auto& p : patterns)
    if (p.order() >= 2) reduced.push_back(p);
  Graph g = reduced.empty() ? families::empty(1) : cyclic_full(reduced).graph;
  while (g.order() < at_least) g = duplicate_vertex(g, 0);
  if (!is_full(g, patterns).verdict) throw InternalError("fallback construction is not full");
  return g;
}

}  // namespace

std::string search_cache_key(std::span<const Graph> patterns, std::size_t lower_hint, std::size_t upper_hint) {
  std::vector<std::string> forms;
  for (const auto& p : patterns)
    forms.push_back(p.order() <= kMaxCanonicalOrder ? canonical_form(p) : "raw:" + to_graph6(p));
  std::sort(forms.begin(), forms.end());
  std::string key;
  for (std::size_t i = 0; i < forms.size(); ++i) key += (i ? "," : "") + forms[i];
  return key + "|" + std::to_string(lower_hint) + "|" + std::to_string(upper_hint);
}

SearchResult f_exact(std::span<const Graph> patterns, std::size_t lower_hint, std::size_t upper_hint,
                     const SearchOptions& options) {
  if (patterns.empty()) throw InvalidArgument("search needs at least one pattern");
  std::size_t max_order = 1;
  for (const auto& p : patterns) {
    if (p.order() == 0) throw InvalidArgument("pattern of order 0");
    max_order = std::max(max_order, p.order());
  }
  const std::size_t start = std::max(lower_hint, max_order);
  if (start > upper_hint)
    throw InvalidArgument("inconsistent hints: search starts at " + std::to_string(start) + " > upper " +
                          std::to_string(upper_hint));

  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](SearchResult r) {
    r.patterns_g6.clear();
    for (const auto& p : patterns) r.patterns_g6.push_back(to_graph6(p));
    r.lower_hint = lower_hint;
    r.upper_hint = upper_hint;
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };

  const std::string key = search_cache_key(patterns, lower_hint, upper_hint);
  if (options.cache_dir)
    if (auto hit = cache_lookup(*options.cache_dir, key)) return finish(std::move(*hit));

  const unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  SearchResult r;
  const std::size_t last = std::min(upper_hint, kMaxEnumerationOrder);
  for (std::size_t n = start; n <= last; ++n) {
    std::size_t examined = 0;
    std::vector<std::string> full = scan_order(n, patterns, threads, examined);
    r.counts[n] = examined;
    if (!full.empty()) {
      r.f = n;
      r.witness_g6 = *std::min_element(full.begin(), full.end());
      r.exact = true;
      break;
    }
    r.exhausted_orders.push_back(n);
  }

  if (!r.f && upper_hint > kMaxEnumerationOrder) {
    const Graph g = fallback_witness(patterns, std::max(start, last + 1));
    r.f = g.order();
    r.witness_g6 = to_graph6(g);
    r.upper_bound_only = true;
  }

  if (options.cache_dir) cache_store(*options.cache_dir, key, r);
  return finish(std::move(r));
}

}  // namespace fullgraph
