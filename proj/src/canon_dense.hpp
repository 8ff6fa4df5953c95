#pragma once

// Fixed-size canonical labelling for graphs of order <= 16, shared by the
// public canonical_form API and the isomorph-free enumerator.

#include <array>
#include <cstdint>

namespace fullgraph::detail {

constexpr int kDenseMax = 16;

struct Dense {
  int n = 0;
  std::array<std::uint32_t, kDenseMax> row{};  // bit j of row[i] = edge {i,j}
};

using Code = std::array<std::uint32_t, kDenseMax>;

struct DenseCanon {
  std::array<std::uint8_t, kDenseMax> lab{};    // lab[i] = vertex placed at position i
  Code code{};                                   // rows of the canonically relabelled graph
  std::array<std::uint8_t, kDenseMax> orbit{};  // smallest vertex of each vertex's known orbit
};

DenseCanon canonicalize(const Dense& g);

// Relabel so that vertex lab[i] becomes i.
Dense apply_labeling(const Dense& g, const std::array<std::uint8_t, kDenseMax>& lab);

inline bool code_equal(const Code& a, const Code& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Delete vertex v and close the gap.
Dense remove_vertex(const Dense& g, int v);

}  // namespace fullgraph::detail
