#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fullgraph/graph.hpp"

namespace fullgraph {

// Addition and multiplication tables of GF(q). Elements are 0..q-1; for
// q = p^e an element is the base-p number whose digits are the polynomial
// coefficients, lowest degree first (so in GF(4), 2 is x and 3 is x+1).
struct FieldTable {
  std::size_t q = 0;
  std::size_t characteristic = 0;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;

  std::uint16_t add(std::size_t a, std::size_t b) const { return add_table[a * q + b]; }
  std::uint16_t mul(std::size_t a, std::size_t b) const { return mul_table[a * q + b]; }
};

// Largest prime accepted by field().
constexpr std::size_t kMaxPrimeField = 61;

std::span<const std::size_t> supported_prime_powers() noexcept;
bool field_supported(std::size_t q) noexcept;

// Throws UnsupportedOrder unless q is a prime <= kMaxPrimeField or one of
// supported_prime_powers().
FieldTable field(std::size_t q);

// A resolvable Steiner system S(point_count, block_size, 2): every class is a
// partition of the points into blocks, every pair lies in exactly one block.
struct ResolvableDesign {
  std::size_t point_count = 0;
  std::size_t block_size = 0;
  std::vector<std::vector<VertexSet>> classes;

  friend bool operator==(const ResolvableDesign&, const ResolvableDesign&) = default;
};

// Points are (x, y) in GF(q)^2 indexed x*q + y. Classes are the lines
// y = a*x + b for each slope a = 0..q-1, followed by the verticals x = c.
ResolvableDesign affine_plane(std::size_t q);

enum class DesignIssueKind { bad_block_size, point_out_of_range, not_a_partition, pair_uncovered, pair_repeated, class_count };

struct DesignIssue {
  DesignIssueKind kind;
  std::string detail;
};

struct DesignReport {
  std::vector<DesignIssue> issues;

  bool valid() const noexcept { return issues.empty(); }
  std::size_t count(DesignIssueKind kind) const noexcept;
};

DesignReport validate_design(const ResolvableDesign& d);

std::string_view to_string(DesignIssueKind kind) noexcept;

}  // namespace fullgraph
