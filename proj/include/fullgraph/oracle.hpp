#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fullgraph/graph.hpp"

namespace fullgraph {

struct SearchOptions {
  unsigned threads = 0;                          // 0 = hardware concurrency
  std::optional<std::filesystem::path> cache_dir;  // no caching when empty
};

struct SearchResult {
  std::vector<std::string> patterns_g6;
  std::size_t lower_hint = 0;
  std::size_t upper_hint = 0;
  std::optional<std::size_t> f;           // smallest order found
  std::optional<std::string> witness_g6;
  bool exact = false;                     // every order in [start, f) exhausted
  bool upper_bound_only = false;          // f comes from a construction above the cap
  std::vector<std::size_t> exhausted_orders;
  std::map<std::size_t, std::size_t> counts;  // graphs examined per order
  double wall_seconds = 0.0;
  bool from_cache = false;
};

// Smallest n in [max(lower_hint, max pattern order), upper_hint] with a full
// graph of order n. Orders above 9 are never enumerated: if nothing is found
// by then and upper_hint > 9, the result carries a construction's order with
// upper_bound_only set. With upper_hint <= 9 and no full graph, f stays empty
// and every scanned order is listed as exhausted. Throws InvalidArgument when
// the search would start above upper_hint.
SearchResult f_exact(std::span<const Graph> patterns, std::size_t lower_hint, std::size_t upper_hint,
                     const SearchOptions& options = {});

// Key used by the cache: sorted canonical pattern forms, then the hints.
std::string search_cache_key(std::span<const Graph> patterns, std::size_t lower_hint, std::size_t upper_hint);

}  // namespace fullgraph
