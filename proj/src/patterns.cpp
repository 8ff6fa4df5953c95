#include "fullgraph/patterns.hpp"

#include <charconv>
#include <string>

#include "fullgraph/error.hpp"

namespace fullgraph {
namespace {

constexpr std::size_t kMaxFamilyOrder = 4096;

Graph parse_term(std::string_view term, std::size_t offset) {
  if (term.empty()) throw ParseError("empty pattern", offset);
  if (term.starts_with("g6:")) {
    try {
      return from_graph6(term.substr(3));
    } catch (const ParseError& e) {
      throw ParseError("bad graph6 literal: " + e.detail(), offset + 3 + e.offset());
    }
  }
  const char family = term[0];
  std::size_t m = 0;
  const auto digits = term.substr(1);
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
    throw ParseError("expected a family letter followed by an order in '" + std::string(term) + "'", offset + 1);
  if (m > kMaxFamilyOrder) throw ParseError("pattern order " + std::to_string(m) + " is too large", offset + 1);
  try {
    switch (family) {
      case 'K': return families::complete(m);
      case 'E': return families::empty(m);
      case 'S': return families::star(m);
      case 'P': return families::path(m);
      case 'C': return families::cycle(m);
      default: break;
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(term) + ": " + e.what(), offset);
  }
  throw ParseError(std::string("unknown pattern family '") + family + "' (use K, E, S, P, C or g6:)", offset);
}

}  // namespace

Graph parse_pattern(std::string_view spec) {
  Graph out;
  bool first = true;
  std::size_t at = 0;
  while (true) {
    const std::size_t plus = spec.find('+', at);
    const std::string_view term = spec.substr(at, plus == std::string_view::npos ? std::string_view::npos : plus - at);
    Graph g = parse_term(term, at);
    out = first ? std::move(g) : disjoint_union(out, g);
    first = false;
    if (plus == std::string_view::npos) break;
    at = plus + 1;
  }
  return out;
}

std::vector<Graph> parse_pattern_list(std::string_view specs) {
  std::vector<Graph> out;
  std::size_t at = 0;
  while (true) {
    const std::size_t comma = specs.find(',', at);
    const std::string_view item = specs.substr(at, comma == std::string_view::npos ? std::string_view::npos : comma - at);
    try {
      out.push_back(parse_pattern(item));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), at + e.offset());
    }
    if (comma == std::string_view::npos) break;
    at = comma + 1;
  }
  return out;
}

}  // namespace fullgraph
