#include "fullgraph/serialize.hpp"

#include <string>

#include "fullgraph/error.hpp"

namespace fullgraph {

Json to_json(const ResolvableDesign& d) {
  Json classes = Json::array();
  for (const auto& cls : d.classes) {
    Json blocks = Json::array();
    for (const auto& b : cls) blocks.push_back(b.members());
    classes.push_back(std::move(blocks));
  }
  return Json{{"q", d.block_size}, {"points", d.point_count}, {"classes", std::move(classes)}};
}

ResolvableDesign design_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("design must be a JSON object", 0);
  if (!j.contains("points") || !j["points"].is_number_unsigned()) throw ParseError("design needs unsigned 'points'", 0);
  if (!j.contains("classes") || !j["classes"].is_array()) throw ParseError("design needs a 'classes' array", 0);
  ResolvableDesign d;
  d.point_count = j["points"].get<std::size_t>();
  for (const auto& cls : j["classes"]) {
    if (!cls.is_array()) throw ParseError("each class must be an array of blocks", 0);
    std::vector<VertexSet> blocks;
    for (const auto& b : cls) {
      if (!b.is_array()) throw ParseError("each block must be an array of points", 0);
      std::vector<Vertex> pts;
      for (const auto& p : b) {
        if (!p.is_number_unsigned()) throw ParseError("points must be unsigned integers", 0);
        pts.push_back(p.get<Vertex>());
      }
      try {
        blocks.emplace_back(std::move(pts));
      } catch (const InvalidArgument& e) {
        throw ParseError(std::string("bad block: ") + e.what(), 0);
      }
    }
    d.classes.push_back(std::move(blocks));
  }
  if (j.contains("q") && j["q"].is_number_unsigned()) d.block_size = j["q"].get<std::size_t>();
  else if (!d.classes.empty() && !d.classes.front().empty()) d.block_size = d.classes.front().front().size();
  return d;
}

Json to_json(const ConstructionRecipe& r) {
  return Json{{"theorem_tag", std::string(to_string(r.theorem_tag))},
              {"parameters", r.parameters},
              {"claimed_order", r.claimed_order}};
}

Json to_json(const DesignReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues) issues.push_back({{"kind", std::string(to_string(i.kind))}, {"detail", i.detail}});
  return Json{{"valid", r.valid()}, {"issues", std::move(issues)}};
}

Json to_json(const FullnessReport& r) {
  Json pats = Json::array();
  for (const auto& pc : r.patterns) {
    Json witnesses = Json::object();
    for (std::size_t v = 0; v < pc.witness_of.size(); ++v)
      if (pc.witness_of[v]) witnesses[std::to_string(v)] = pc.witnesses[*pc.witness_of[v]];
    pats.push_back({{"pattern_g6", to_graph6(pc.pattern)}, {"uncovered", pc.uncovered()}, {"witnesses", std::move(witnesses)}});
  }
  return Json{{"verdict", r.verdict}, {"host_order", r.host_order}, {"patterns", std::move(pats)}};
}

Json to_json(const bounds::BoundSummary& s) {
  Json pats = Json::array();
  for (const auto& p : s.patterns)
    pats.push_back({{"graph6", p.graph6}, {"order", p.order}, {"min_degree", p.min_degree}, {"max_degree", p.max_degree}});
  Json out{{"patterns", std::move(pats)}};
  if (s.pair) out["instance"] = {{"m", s.pair->m}, {"n", s.pair->n}, {"delta", s.pair->delta}, {"Delta", s.pair->Delta}};
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json je{{"name", e.name}, {"kind", std::string(bounds::to_string(e.kind))}, {"applicable", e.applicable}};
    je["value"] = e.value;
    if (!e.reason.empty()) je["reason"] = e.reason;
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  const auto lo = s.best_lower();
  const auto hi = s.best_upper();
  out["best_lower"] = lo ? Json(*lo) : Json(nullptr);
  out["best_upper"] = hi ? Json(*hi) : Json(nullptr);
  out["consistent"] = s.consistent();
  return out;
}

Json to_json(const SearchResult& r, bool include_timing) {
  Json counts = Json::object();
  for (auto [order, c] : r.counts) counts[std::to_string(order)] = c;
  Json out{{"patterns", r.patterns_g6},
           {"lower_hint", r.lower_hint},
           {"upper_hint", r.upper_hint},
           {"f", r.f ? Json(*r.f) : Json(nullptr)},
           {"witness_g6", r.witness_g6 ? Json(*r.witness_g6) : Json(nullptr)},
           {"exact", r.exact},
           {"upper_bound_only", r.upper_bound_only},
           {"exhausted_orders", r.exhausted_orders},
           {"counts", std::move(counts)}};
  if (include_timing) {
    out["wall_seconds"] = r.wall_seconds;
    out["from_cache"] = r.from_cache;
  }
  return out;
}

}  // namespace fullgraph
