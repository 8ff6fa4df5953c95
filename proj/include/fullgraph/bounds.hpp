#pragma once

// Closed-form bounds on the minimum order of a full graph. Every evaluator is
// exact integer arithmetic; ceil(c*sqrt(t)) is the least z with z*z >= c*c*t.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fullgraph/graph.hpp"

namespace fullgraph::bounds {

using Value = std::int64_t;

std::uint64_t floor_sqrt(std::uint64_t t) noexcept;
std::uint64_t ceil_sqrt(std::uint64_t t) noexcept;
// ceil(c * sqrt(t)); throws InvalidArgument on overflow.
std::uint64_t ceil_c_sqrt(std::uint64_t c, std::uint64_t t);
// ceil(sqrt(n / d)) for d >= 1.
std::uint64_t ceil_sqrt_ratio(std::uint64_t n, std::uint64_t d);

// ceil((sqrt(m-1) + sqrt(n-1))^2) for m, n >= 2.
Value egh_formula(std::size_t m, std::size_t n);

// 2 * sum(order - 1).
Value cyclic_upper(std::span<const Graph> patterns);

// (k-1)^2; throws UnsupportedOrder when no affine plane of order k-1 is available.
Value design_upper(std::size_t k);

// Parameter choice for the (H, independent n-set) construction.
struct HvsEmptyPlan {
  std::size_t delta = 0;
  std::size_t m_prime = 0;  // vertices of H outside the closed neighbourhood of x
  std::size_t r = 0;
  std::size_t s = 0;        // ceil(n / (r - 1))
  Value order = 0;          // n - 1 + delta*r + s
  std::string r_rule;       // "sqrt", "3m'", "clamped" or "explicit"
};

// Throws InvalidArgument when delta == 0 or no admissible r exists.
HvsEmptyPlan plan_h_vs_empty(std::size_t n, std::size_t delta, std::size_t m_prime, std::optional<std::size_t> r = {});

struct HvsEmptyUpper {
  Value bound = 0;                      // n + ceil(2 sqrt(delta n)) + 2 delta
  std::optional<Value> construction_order;
  bool valid = false;                   // n >= 9 delta m'^2
};

HvsEmptyUpper h_vs_empty_upper(const Graph& h, std::size_t n);

// Requires 2*Delta < delta.
Value general_lower_bound(std::size_t delta, std::size_t Delta, std::size_t n);

Value star_trivial_lower(std::size_t m, std::size_t n);

struct StarUpper {
  Value value = 0;
  std::size_t k = 0;  // smallest minimiser
};

StarUpper star_upper(std::size_t m, std::size_t n);
Value star_lower(std::size_t m, std::size_t n);
Value star_exact(std::size_t m, std::size_t n);

enum class StarRegime { large_n, small_n };

struct StarClosedForm {
  Value value = 0;
  StarRegime regime = StarRegime::large_n;
  bool approximate = false;  // true in the small_n regime
};

StarClosedForm star_closed_form(std::size_t m, std::size_t n);

// min over v of alpha_with_vertex(h, v).
std::size_t min_alpha_with_vertex(const Graph& h);
Value delta_zero_exact(const Graph& h, std::size_t n);

enum class BoundKind { lower, upper, exact };

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::lower;
  Value value = 0;
  bool applicable = false;
  std::string reason;
};

struct PatternInfo {
  std::string graph6;
  std::size_t order = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

// Two-pattern instances: m, delta from the first pattern; n, Delta from the second.
struct PairInstance {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
};

struct BoundSummary {
  std::vector<PatternInfo> patterns;
  std::optional<PairInstance> pair;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(std::string_view name) const noexcept;
  std::optional<Value> best_lower() const noexcept;
  std::optional<Value> best_upper() const noexcept;
  // Every applicable lower <= every applicable upper.
  bool consistent() const noexcept;
};

// Evaluates every formula for the pattern list; when n is given an
// independent n-set is appended as a further pattern.
BoundSummary summarize(std::span<const Graph> patterns, std::optional<std::size_t> n = {});

std::string_view to_string(BoundKind kind) noexcept;

bool is_complete(const Graph& g) noexcept;
bool is_edgeless(const Graph& g) noexcept;
bool is_star(const Graph& g) noexcept;

}  // namespace fullgraph::bounds
