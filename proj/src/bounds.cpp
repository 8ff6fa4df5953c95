#include "fullgraph/bounds.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fullgraph/designs.hpp"
#include "fullgraph/error.hpp"

namespace fullgraph::bounds {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidArgument("bound arithmetic overflow");
  return out;
}

Value ceil_div(Value a, Value b) { return (a + b - 1) / b; }

void require_at_least(std::size_t value, std::size_t min, const char* what) {
  if (value < min)
    throw InvalidArgument(std::string(what) + " must be >= " + std::to_string(min) + ", got " + std::to_string(value));
}

void require_n_ge_m(std::size_t m, std::size_t n) {
  require_at_least(m, 2, "m");
  if (n < m) throw InvalidArgument("requires n >= m (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
}

}  // namespace

std::uint64_t floor_sqrt(std::uint64_t t) noexcept {
  if (t < 2) return t;
  std::uint64_t x = t;
  std::uint64_t y = t / 2 + (t & 1U);  // ceil(t / 2) without overflow
  while (y < x) {
    x = y;
    y = (x + t / x) / 2;
  }
  return x;
}

std::uint64_t ceil_sqrt(std::uint64_t t) noexcept {
  const std::uint64_t r = floor_sqrt(t);
  return r * r == t ? r : r + 1;
}

std::uint64_t ceil_c_sqrt(std::uint64_t c, std::uint64_t t) { return ceil_sqrt(checked_mul(checked_mul(c, c), t)); }

std::uint64_t ceil_sqrt_ratio(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("ceil_sqrt_ratio: zero divisor");
  std::uint64_t z = ceil_sqrt(n / d);
  while (z > 0 && checked_mul(checked_mul(z - 1, z - 1), d) >= n) --z;
  while (checked_mul(checked_mul(z, z), d) < n) ++z;
  return z;
}

Value egh_formula(std::size_t m, std::size_t n) {
  require_at_least(m, 2, "m");
  require_at_least(n, 2, "n");
  return static_cast<Value>((m - 1) + (n - 1) + ceil_c_sqrt(2, (m - 1) * (n - 1)));
}

Value cyclic_upper(std::span<const Graph> patterns) {
  Value sum = 0;
  for (const auto& p : patterns) {
    if (p.order() == 0) throw InvalidArgument("pattern of order 0");
    sum += static_cast<Value>(p.order()) - 1;
  }
  return 2 * sum;
}

Value design_upper(std::size_t k) {
  require_at_least(k, 3, "k");
  if (!field_supported(k - 1))
    throw UnsupportedOrder("no affine plane of order " + std::to_string(k - 1) + " available");
  return static_cast<Value>((k - 1) * (k - 1));
}

HvsEmptyPlan plan_h_vs_empty(std::size_t n, std::size_t delta, std::size_t m_prime, std::optional<std::size_t> r) {
  if (delta == 0) throw InvalidArgument("minimum degree 0: use the delta-zero construction");
  require_at_least(n, 1, "n");
  HvsEmptyPlan plan;
  plan.delta = delta;
  plan.m_prime = m_prime;
  const std::size_t r_min = std::max<std::size_t>(3 * m_prime, 2);
  if (r) {
    if (*r < 3 * m_prime)
      throw InvalidArgument("r = " + std::to_string(*r) + " violates r >= 3m' = " + std::to_string(3 * m_prime));
    if (*r < 2) throw InvalidArgument("r = " + std::to_string(*r) + " violates r >= 2");
    plan.r = *r;
    plan.r_rule = "explicit";
  } else {
    const std::size_t r0 = static_cast<std::size_t>(ceil_sqrt_ratio(n, delta)) + 1;
    if (r0 >= r_min) {
      plan.r = r0;
      plan.r_rule = "sqrt";
    } else {
      plan.r = r_min;
      plan.r_rule = "3m'";
    }
    if (plan.r > n && r_min <= n) {
      plan.r = n;
      plan.r_rule = "clamped";
    }
  }
  if (n < plan.r)
    throw InvalidArgument("n = " + std::to_string(n) + " too small for the W split: need n >= r = " +
                          std::to_string(plan.r));
  plan.s = static_cast<std::size_t>(ceil_div(static_cast<Value>(n), static_cast<Value>(plan.r - 1)));
  plan.order = static_cast<Value>(n - 1 + delta * plan.r + plan.s);
  return plan;
}

HvsEmptyUpper h_vs_empty_upper(const Graph& h, std::size_t n) {
  const std::size_t delta = min_degree(h);
  if (delta == 0) throw InvalidArgument("minimum degree 0: bound needs delta >= 1");
  const std::size_t m_prime = h.order() - delta - 1;
  HvsEmptyUpper out;
  out.bound = static_cast<Value>(n + ceil_c_sqrt(2, delta * n) + 2 * delta);
  out.valid = n >= 9 * delta * m_prime * m_prime;
  try {
    out.construction_order = plan_h_vs_empty(n, delta, m_prime).order;
  } catch (const InvalidArgument&) {
    out.construction_order.reset();
  }
  return out;
}

Value general_lower_bound(std::size_t delta, std::size_t Delta, std::size_t n) {
  if (2 * Delta >= delta)
    throw InvalidArgument("general lower bound needs 2*Delta < delta (got delta=" + std::to_string(delta) +
                          ", Delta=" + std::to_string(Delta) + ")");
  require_at_least(n, 1, "n");
  return static_cast<Value>(n) + static_cast<Value>(ceil_c_sqrt(2, (n + Delta) * (delta - 2 * Delta))) -
         static_cast<Value>(delta - Delta);
}

Value star_trivial_lower(std::size_t m, std::size_t n) {
  require_at_least(m, 2, "m");
  require_at_least(n, 1, "n");
  return static_cast<Value>(n + m - 1);
}

StarUpper star_upper(std::size_t m, std::size_t n) {
  require_n_ge_m(m, n);
  const auto nn = static_cast<Value>(n), mm = static_cast<Value>(m);
  StarUpper best{std::numeric_limits<Value>::max(), 0};
  for (Value k = 1; k <= nn - 1; ++k) {
    const Value v = std::max(k + ceil_div(nn - 1, k), 2 * mm - 3 - k);
    if (v < best.value) best = {v, static_cast<std::size_t>(k)};
  }
  best.value += nn;
  return best;
}

Value star_lower(std::size_t m, std::size_t n) {
  require_n_ge_m(m, n);
  const auto nn = static_cast<Value>(n), mm = static_cast<Value>(m);
  Value best = std::numeric_limits<Value>::max();
  for (Value d = 1; d <= nn; ++d) best = std::min(best, std::max(d - 1 + ceil_div(nn, d), 2 * mm - 2 - d));
  return nn + best;
}

Value star_exact(std::size_t m, std::size_t n) {
  require_at_least(m, 2, "m");
  require_at_least(n, 2, "n");
  if (n < m) return static_cast<Value>(n + m - 1);
  return star_upper(m, n).value;
}

StarClosedForm star_closed_form(std::size_t m, std::size_t n) {
  require_n_ge_m(m, n);
  StarClosedForm out;
  if (9 * (n - 1) > 4 * (m - 2) * (m - 2)) {
    out.regime = StarRegime::large_n;
    out.value = static_cast<Value>(n + ceil_c_sqrt(2, n - 1));
    return out;
  }
  // beta*sqrt(n-1) = 2m-3, so (1/4)(3 beta - sqrt(beta^2 - 8)) sqrt(n-1)
  // = (3(2m-3) - sqrt((2m-3)^2 - 8(n-1))) / 4.
  out.regime = StarRegime::small_n;
  out.approximate = true;
  const auto b = static_cast<Value>(2 * m - 3);
  const Value a = 3 * b;
  const Value disc = b * b - 8 * static_cast<Value>(n - 1);
  if (disc < 0) throw InternalError("negative discriminant in small-n star regime");
  // least z with a - 4z <= sqrt(disc)
  auto ok = [&](Value z) {
    const Value t = a - 4 * z;
    return t <= 0 || t * t <= disc;
  };
  Value lo = 0, hi = ceil_div(a, 4);
  while (lo < hi) {
    const Value mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  out.value = static_cast<Value>(n) + lo;
  return out;
}

std::size_t min_alpha_with_vertex(const Graph& h) {
  if (h.order() == 0) throw InvalidArgument("pattern of order 0");
  std::size_t s = h.order();
  for (Vertex v = 0; v < h.order(); ++v) s = std::min(s, alpha_with_vertex(h, v));
  return s;
}

Value delta_zero_exact(const Graph& h, std::size_t n) {
  if (h.order() == 0) throw InvalidArgument("pattern of order 0");
  if (min_degree(h) != 0) throw InvalidArgument("delta-zero formula needs a pattern with an isolated vertex");
  const std::size_t s = min_alpha_with_vertex(h);
  if (n < s) throw InvalidArgument("delta-zero formula needs n >= s = " + std::to_string(s));
  return static_cast<Value>(n - s + h.order());
}

bool is_complete(const Graph& g) noexcept { return g.edge_count() == g.order() * (g.order() - (g.order() > 0)) / 2; }
bool is_edgeless(const Graph& g) noexcept { return g.edge_count() == 0; }

bool is_star(const Graph& g) noexcept {
  const std::size_t m = g.order();
  if (m < 2 || g.edge_count() != m - 1) return false;
  for (Vertex v = 0; v < m; ++v)
    if (g.degree(v) == m - 1) return true;
  return false;
}

const BoundEntry* BoundSummary::find(std::string_view name) const noexcept {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<Value> BoundSummary::best_lower() const noexcept {
  std::optional<Value> best;
  for (const auto& e : entries)
    if (e.applicable && e.kind != BoundKind::upper && (!best || e.value > *best)) best = e.value;
  return best;
}

std::optional<Value> BoundSummary::best_upper() const noexcept {
  std::optional<Value> best;
  for (const auto& e : entries)
    if (e.applicable && e.kind != BoundKind::lower && (!best || e.value < *best)) best = e.value;
  return best;
}

bool BoundSummary::consistent() const noexcept {
  const auto lo = best_lower();
  const auto hi = best_upper();
  return !lo || !hi || *lo <= *hi;
}

namespace {

class SummaryBuilder {
 public:
  explicit SummaryBuilder(BoundSummary& s) : s_(s) {}

  void add(std::string name, BoundKind kind, Value value, std::string reason = {}) {
    s_.entries.push_back({std::move(name), kind, value, true, std::move(reason)});
  }
  void skip(std::string name, BoundKind kind, std::string reason, Value value = 0) {
    s_.entries.push_back({std::move(name), kind, value, false, std::move(reason)});
  }

 private:
  BoundSummary& s_;
};

struct Orientation {
  Graph a;  // arbitrary pattern
  std::size_t n = 0;  // order of the independent set
  bool complemented = false;
};

// Finds (A, independent n-set), possibly after swapping or complementing the pair.
std::optional<Orientation> versus_empty(const Graph& h1, const Graph& h2) {
  if (is_edgeless(h2)) return Orientation{h1, h2.order(), false};
  if (is_edgeless(h1)) return Orientation{h2, h1.order(), false};
  const Graph c1 = complement(h1), c2 = complement(h2);
  if (is_edgeless(c2)) return Orientation{c1, c2.order(), true};
  if (is_edgeless(c1)) return Orientation{c2, c1.order(), true};
  return std::nullopt;
}

void add_versus_empty(SummaryBuilder& b, const Orientation& o) {
  const Graph& a = o.a;
  const std::size_t m = a.order(), n = o.n;
  const std::string note = o.complemented ? "evaluated on the complemented pair" : "";
  if (is_complete(a) && m >= 2 && n >= 2) b.add("egh_formula", BoundKind::exact, egh_formula(m, n), note);

  if (is_star(a)) {
    b.add("star_trivial_lower", BoundKind::lower, star_trivial_lower(m, n), note);
    if (n < m) {
      b.add("complete_bipartite_exact", BoundKind::exact, static_cast<Value>(n + m - 1), note);
    } else {
      b.add("star_lower", BoundKind::lower, star_lower(m, n), note);
      const auto up = star_upper(m, n);
      b.add("star_upper", BoundKind::upper, up.value, "k=" + std::to_string(up.k) + (note.empty() ? "" : "; " + note));
      b.add("star_exact", BoundKind::exact, star_exact(m, n), note);
      const auto cf = star_closed_form(m, n);
      if (cf.regime == StarRegime::large_n) b.add("star_closed_form", BoundKind::exact, cf.value, note);
      else b.skip("star_closed_form", BoundKind::exact, "small-n regime: approximation only", cf.value);
    }
  }

  const std::size_t delta = min_degree(a);
  if (delta >= 1) {
    const auto up = h_vs_empty_upper(a, n);
    if (up.valid) b.add("h_vs_empty_bound", BoundKind::upper, up.bound, note);
    else b.skip("h_vs_empty_bound", BoundKind::upper, "needs n >= 9*delta*m'^2", up.bound);
    if (up.construction_order) b.add("h_vs_empty_construction", BoundKind::upper, *up.construction_order, note);
    else b.skip("h_vs_empty_construction", BoundKind::upper, "no admissible r for this n");
  } else {
    const std::size_t s = min_alpha_with_vertex(a);
    if (n >= s) b.add("delta_zero_exact", BoundKind::exact, delta_zero_exact(a, n), note);
    else b.skip("delta_zero_exact", BoundKind::exact, "needs n >= s = " + std::to_string(s));
  }
}

struct LowerCandidate {
  Value value;
  std::string reason;
};

void add_general_lower(SummaryBuilder& b, std::span<const Graph> pats) {
  std::optional<LowerCandidate> best;
  for (int comp = 0; comp < 2; ++comp) {
    for (std::size_t i = 0; i < pats.size(); ++i)
      for (std::size_t j = 0; j < pats.size(); ++j) {
        if (i == j) continue;
        const Graph& hi = pats[i];
        const Graph& hj = pats[j];
        const std::size_t ni = hi.order(), nj = hj.order();
        const std::size_t delta = comp ? ni - 1 - max_degree(hi) : min_degree(hi);
        const std::size_t Delta = comp ? nj - 1 - min_degree(hj) : max_degree(hj);
        if (2 * Delta >= delta) continue;
        const Value v = general_lower_bound(delta, Delta, nj);
        if (!best || v > best->value)
          best = LowerCandidate{v, std::string(comp ? "complements of " : "") + "patterns " + std::to_string(i + 1) +
                                       "," + std::to_string(j + 1) + ": delta=" + std::to_string(delta) +
                                       " Delta=" + std::to_string(Delta) + " n=" + std::to_string(nj)};
      }
  }
  if (best) b.add("general_lower_bound", BoundKind::lower, best->value, best->reason);
  else b.skip("general_lower_bound", BoundKind::lower, "no pattern pair with 2*Delta < delta");
}

}  // namespace

BoundSummary summarize(std::span<const Graph> patterns, std::optional<std::size_t> n) {
  std::vector<Graph> all(patterns.begin(), patterns.end());
  if (n) all.push_back(families::empty(*n));
  for (const auto& p : all)
    if (p.order() == 0) throw InvalidArgument("pattern of order 0");

  BoundSummary s;
  for (const auto& p : all) s.patterns.push_back({to_graph6(p), p.order(), min_degree(p), max_degree(p)});
  if (all.size() == 2)
    s.pair = PairInstance{all[0].order(), all[1].order(), min_degree(all[0]), max_degree(all[1])};
  SummaryBuilder b(s);
  if (all.empty()) return s;

  // Order-1 patterns are covered by every vertex of every graph.
  std::vector<Graph> reduced;
  for (const auto& p : all)
    if (p.order() >= 2) reduced.push_back(p);
  if (reduced.empty()) {
    b.add("single_vertex", BoundKind::exact, 1, "every pattern is K1");
    return s;
  }

  std::size_t max_order = 0;
  for (const auto& p : reduced) max_order = std::max(max_order, p.order());
  b.add("max_pattern_order", BoundKind::lower, static_cast<Value>(max_order));
  if (reduced.size() == 1) b.add("single_pattern", BoundKind::exact, static_cast<Value>(max_order), "the pattern is full for itself");

  b.add("cyclic_upper", BoundKind::upper, cyclic_upper(reduced));

  std::optional<std::size_t> q;
  for (std::size_t c = std::max<std::size_t>(max_order, 2); c <= kMaxPrimeField; ++c)
    if (field_supported(c) && c + 1 >= reduced.size()) {
      q = c;
      break;
    }
  if (q) b.add("design_upper", BoundKind::upper, static_cast<Value>(*q * *q), "affine plane of order " + std::to_string(*q));
  else b.skip("design_upper", BoundKind::upper, "no supported affine plane is large enough");

  if (reduced.size() >= 2) add_general_lower(b, reduced);
  if (reduced.size() == 2) {
    if (auto o = versus_empty(reduced[0], reduced[1])) add_versus_empty(b, *o);
  }
  return s;
}

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
  }
  return "unknown";
}

}  // namespace fullgraph::bounds
