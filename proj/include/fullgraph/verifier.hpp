#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fullgraph/graph.hpp"

namespace fullgraph {

// roles[p] is the host vertex playing pattern vertex p.
using RoleMap = std::vector<Vertex>;

struct PatternCoverage {
  Graph pattern;
  std::vector<RoleMap> witnesses;
  // Per host vertex: index into witnesses, or nullopt when uncovered.
  std::vector<std::optional<std::size_t>> witness_of;

  bool full() const noexcept;
  std::vector<Vertex> uncovered() const;
};

struct FullnessReport {
  std::size_t host_order = 0;
  std::vector<PatternCoverage> patterns;
  bool verdict = false;
};

// Induced copy of pattern in host that uses v, or nullopt. Pattern vertices
// are placed in descending-degree order, host candidates in ascending index,
// and both edges and non-edges must match.
std::optional<RoleMap> find_induced_copy_containing(const Graph& host, const Graph& pattern, Vertex v);

// Any induced copy of pattern in host.
std::optional<RoleMap> find_induced_copy(const Graph& host, const Graph& pattern);

struct VerifyOptions {
  // Check patterns on separate threads once the host has at least this many vertices.
  std::size_t parallel_threshold = 64;
};

// Every vertex in an induced copy of every pattern. A found copy marks all of
// its vertices covered, and the scan for a pattern stops once all are.
FullnessReport is_full(const Graph& host, std::span<const Graph> patterns, const VerifyOptions& options = {});

// True iff roles is injective into host and preserves edges and non-edges.
bool recheck_witness(const Graph& host, const Graph& pattern, std::span<const Vertex> roles);

// Re-validates every witness of the report independently of the search.
bool recheck_report(const Graph& host, const FullnessReport& report);

}  // namespace fullgraph
