#include "fullgraph/verifier.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <string>

#include "fullgraph/error.hpp"

namespace fullgraph {
namespace {

constexpr Vertex kUnplaced = std::numeric_limits<Vertex>::max();

class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern)
      : host_(host),
        pattern_(pattern),
        k_(pattern.order()),
        n_(host.order()),
        words_(host.words_per_row()),
        all_(bits::full(host.order())),
        used_(words_, 0),
        image_(k_, kUnplaced),
        scratch_(k_, std::vector<Word>(words_)) {
    order_.resize(k_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return pattern_.degree(a) > pattern_.degree(b); });
    host_deg_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) host_deg_[v] = host_.degree(v);
    pat_deg_.resize(k_);
    for (Vertex p = 0; p < k_; ++p) pat_deg_[p] = pattern_.degree(p);
  }

  std::optional<RoleMap> containing(Vertex v) {
    if (k_ > n_) return std::nullopt;
    for (Vertex p : order_) {
      if (!compatible(p, v)) continue;
      seq_.clear();
      seq_.push_back(p);
      for (Vertex q : order_)
        if (q != p) seq_.push_back(q);
      if (attempt(v)) return image_;
    }
    return std::nullopt;
  }

  std::optional<RoleMap> any() {
    if (k_ > n_ || k_ == 0) return k_ == 0 ? std::optional<RoleMap>(RoleMap{}) : std::nullopt;
    seq_ = order_;
    for (Vertex v = 0; v < n_; ++v)
      if (compatible(seq_[0], v) && attempt(v)) return image_;
    return std::nullopt;
  }

 private:
  // Induced copies need deg(p) <= deg(h) and the same for non-degrees.
  bool compatible(Vertex p, Vertex h) const {
    return pat_deg_[p] <= host_deg_[h] && (k_ - 1 - pat_deg_[p]) <= (n_ - 1 - host_deg_[h]);
  }

  bool attempt(Vertex v) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(image_.begin(), image_.end(), kUnplaced);
    image_[seq_[0]] = v;
    bits::set(used_, v);
    if (extend(1)) return true;
    image_[seq_[0]] = kUnplaced;
    bits::reset(used_, v);
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == k_) return true;
    const Vertex q = seq_[depth];
    std::vector<Word>& cand = scratch_[depth];
    std::copy(all_.begin(), all_.end(), cand.begin());
    kernels::andnot_into(cand, used_);
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex placed = seq_[d];
      if (pattern_.adjacent(q, placed)) kernels::and_into(cand, host_.row(image_[placed]));
      else kernels::andnot_into(cand, host_.row(image_[placed]));
    }
    for (std::size_t w = 0; w < words_; ++w) {
      while (cand[w]) {
        const auto c = static_cast<Vertex>(w * bits::kWordBits + static_cast<std::size_t>(std::countr_zero(cand[w])));
        cand[w] &= cand[w] - 1;
        if (!compatible(q, c)) continue;
        image_[q] = c;
        bits::set(used_, c);
        if (extend(depth + 1)) return true;
        bits::reset(used_, c);
        image_[q] = kUnplaced;
      }
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::size_t k_, n_, words_;
  std::vector<Word> all_;
  std::vector<Word> used_;
  RoleMap image_;
  std::vector<std::vector<Word>> scratch_;
  std::vector<Vertex> order_;
  std::vector<Vertex> seq_;
  std::vector<std::size_t> host_deg_;
  std::vector<std::size_t> pat_deg_;
};

PatternCoverage cover(const Graph& host, const Graph& pattern) {
  PatternCoverage pc;
  pc.pattern = pattern;
  pc.witness_of.assign(host.order(), std::nullopt);
  InducedMatcher matcher(host, pattern);
  std::size_t remaining = host.order();
  for (Vertex v = 0; v < host.order() && remaining > 0; ++v) {
    if (pc.witness_of[v]) continue;
    auto found = matcher.containing(v);
    if (!found) continue;
    const std::size_t idx = pc.witnesses.size();
    for (Vertex u : *found)
      if (!pc.witness_of[u]) {
        pc.witness_of[u] = idx;
        --remaining;
      }
    pc.witnesses.push_back(std::move(*found));
  }
  return pc;
}

}  // namespace

bool PatternCoverage::full() const noexcept {
  return std::all_of(witness_of.begin(), witness_of.end(), [](const auto& w) { return w.has_value(); });
}

std::vector<Vertex> PatternCoverage::uncovered() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < witness_of.size(); ++v)
    if (!witness_of[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::optional<RoleMap> find_induced_copy_containing(const Graph& host, const Graph& pattern, Vertex v) {
  if (pattern.order() == 0) throw InvalidArgument("pattern must have at least one vertex");
  if (v >= host.order()) throw InvalidArgument("vertex " + std::to_string(v) + " not in host");
  InducedMatcher m(host, pattern);
  return m.containing(v);
}

std::optional<RoleMap> find_induced_copy(const Graph& host, const Graph& pattern) {
  InducedMatcher m(host, pattern);
  return m.any();
}

FullnessReport is_full(const Graph& host, std::span<const Graph> patterns, const VerifyOptions& options) {
  if (patterns.empty()) throw InvalidArgument("is_full needs at least one pattern");
  for (const auto& p : patterns)
    if (p.order() == 0) throw InvalidArgument("pattern must have at least one vertex");

  FullnessReport report;
  report.host_order = host.order();
  if (patterns.size() > 1 && host.order() >= options.parallel_threshold) {
    std::vector<std::future<PatternCoverage>> jobs;
    for (const auto& p : patterns) jobs.push_back(std::async(std::launch::async, [&host, &p] { return cover(host, p); }));
    for (auto& j : jobs) report.patterns.push_back(j.get());
  } else {
    for (const auto& p : patterns) report.patterns.push_back(cover(host, p));
  }
  report.verdict = std::all_of(report.patterns.begin(), report.patterns.end(), [](const auto& pc) { return pc.full(); });
  return report;
}

bool recheck_witness(const Graph& host, const Graph& pattern, std::span<const Vertex> roles) {
  if (roles.size() != pattern.order()) return false;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] >= host.order()) return false;
    for (std::size_t j = i + 1; j < roles.size(); ++j) {
      if (roles[i] == roles[j]) return false;
      if (host.adjacent(roles[i], roles[j]) != pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        return false;
    }
  }
  return true;
}

bool recheck_report(const Graph& host, const FullnessReport& report) {
  for (const auto& pc : report.patterns) {
    for (const auto& w : pc.witnesses)
      if (!recheck_witness(host, pc.pattern, w)) return false;
    for (std::size_t v = 0; v < pc.witness_of.size(); ++v) {
      if (!pc.witness_of[v]) continue;
      const auto& w = pc.witnesses[*pc.witness_of[v]];
      if (std::find(w.begin(), w.end(), static_cast<Vertex>(v)) == w.end()) return false;
    }
  }
  return true;
}

}  // namespace fullgraph
