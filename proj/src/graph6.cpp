// graph6: order prefix, then the upper triangle in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed 6 bits per byte, each byte
// offset by 63. Orders above 62 use the 126-escaped multi-byte prefix.

#include <string>
#include <string_view>

#include "fullgraph/error.hpp"
#include "fullgraph/graph.hpp"

namespace fullgraph {
namespace {

constexpr unsigned char kLow = 63;
constexpr unsigned char kHigh = 126;
constexpr std::size_t kMaxOrder = 1U << 16;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t payload_bytes(std::size_t n) {
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (nbits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLow));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kHigh));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kLow));
  } else {
    out.push_back(static_cast<char>(kHigh));
    out.push_back(static_cast<char>(kHigh));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kLow));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kLow));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kLow));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kLow || c > kHigh) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", base + i);
  }
  auto digit = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(text[i]) - kLow); };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != kHigh) {
    n = digit(0);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kHigh) {
    if (text.size() < 8) throw ParseError("graph6: truncated 8-byte order prefix", base + text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | digit(i);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte order prefix", base + text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | digit(i);
    pos = 4;
  }
  if (n > kMaxOrder) throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum", base);

  const std::size_t need = payload_bytes(n);
  if (text.size() < pos + need) throw ParseError("graph6: truncated adjacency payload", base + text.size());
  if (text.size() > pos + need) throw ParseError("graph6: trailing garbage", base + pos + need);

  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t byte = digit(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = digit(pos + need - 1);
    const std::size_t pad = 6 - bit % 6;
    if (last & ((std::size_t{1} << pad) - 1)) throw ParseError("graph6: nonzero padding bits", base + pos + need - 1);
  }
  return g;
}

}  // namespace fullgraph
