#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fullgraph/graph.hpp"

namespace fullgraph {

constexpr std::size_t kMaxEnumerationOrder = 9;

// Number of isomorphism classes for orders 0..9.
std::size_t known_graph_count(std::size_t order);

struct EnumerateOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

// One canonically labelled representative per isomorphism class, in a fixed
// order, delivered in batches. Orders up to 8 are memoised; order 9 is
// generated batch by batch. Throws UnsupportedOrder above the cap.
void for_each_graph_batch(std::size_t order, const std::function<void(std::span<const Graph>)>& fn,
                          const EnumerateOptions& options = {});

std::vector<Graph> enumerate_graphs(std::size_t order, const EnumerateOptions& options = {});
std::size_t count_graphs(std::size_t order, const EnumerateOptions& options = {});

}  // namespace fullgraph
