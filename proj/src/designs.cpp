#include "fullgraph/designs.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fullgraph/error.hpp"

namespace fullgraph {
namespace {

struct PrimePower {
  std::size_t q;
  std::size_t p;
  // Monic irreducible polynomial over GF(p), coefficients lowest degree first.
  std::vector<std::size_t> modulus;
};

const std::vector<PrimePower>& prime_power_list() {
  static const std::vector<PrimePower> list{
      {4, 2, {1, 1, 1}},        // x^2 + x + 1
      {8, 2, {1, 1, 0, 1}},     // x^3 + x + 1
      {9, 3, {1, 0, 1}},        // x^2 + 1
      {16, 2, {1, 1, 0, 0, 1}}, // x^4 + x + 1
      {25, 5, {2, 0, 1}},       // x^2 + 2
      {27, 3, {1, 2, 0, 1}},    // x^3 + 2x + 1
  };
  return list;
}

constexpr std::array<std::size_t, 6> kPrimePowers{4, 8, 9, 16, 25, 27};

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> digits(std::size_t value, std::size_t p, std::size_t len) {
  std::vector<std::size_t> d(len);
  for (auto& x : d) {
    x = value % p;
    value /= p;
  }
  return d;
}

std::size_t from_digits(const std::vector<std::size_t>& d, std::size_t p) {
  std::size_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

FieldTable extension_field(const PrimePower& pp) {
  const std::size_t q = pp.q, p = pp.p, e = pp.modulus.size() - 1;
  FieldTable f{q, p, std::vector<std::uint16_t>(q * q), std::vector<std::uint16_t>(q * q)};
  for (std::size_t a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    for (std::size_t b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<std::size_t> sum(e);
      for (std::size_t i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_table[a * q + b] = static_cast<std::uint16_t>(from_digits(sum, p));

      std::vector<std::size_t> prod(2 * e - 1, 0);
      for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // reduce: x^e = -(modulus[0..e-1])
      for (std::size_t deg = prod.size(); deg-- > e;) {
        const std::size_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::size_t i = 0; i < e; ++i) prod[deg - e + i] = (prod[deg - e + i] + (p - pp.modulus[i]) * c) % p;
      }
      prod.resize(e);
      f.mul_table[a * q + b] = static_cast<std::uint16_t>(from_digits(prod, p));
    }
  }
  return f;
}

FieldTable prime_field(std::size_t p) {
  FieldTable f{p, p, std::vector<std::uint16_t>(p * p), std::vector<std::uint16_t>(p * p)};
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      f.add_table[a * p + b] = static_cast<std::uint16_t>((a + b) % p);
      f.mul_table[a * p + b] = static_cast<std::uint16_t>((a * b) % p);
    }
  return f;
}

}  // namespace

std::span<const std::size_t> supported_prime_powers() noexcept { return kPrimePowers; }

bool field_supported(std::size_t q) noexcept {
  if (q <= kMaxPrimeField && is_prime(q)) return true;
  return std::find(kPrimePowers.begin(), kPrimePowers.end(), q) != kPrimePowers.end();
}

FieldTable field(std::size_t q) {
  if (q <= kMaxPrimeField && is_prime(q)) return prime_field(q);
  for (const auto& pp : prime_power_list())
    if (pp.q == q) return extension_field(pp);
  throw UnsupportedOrder("unsupported field order " + std::to_string(q) + ": need a prime <= " +
                         std::to_string(kMaxPrimeField) + " or one of 4, 8, 9, 16, 25, 27");
}

ResolvableDesign affine_plane(std::size_t q) {
  const FieldTable f = field(q);
  ResolvableDesign d;
  d.point_count = q * q;
  d.block_size = q;
  auto point = [q](std::size_t x, std::size_t y) { return static_cast<Vertex>(x * q + y); };
  for (std::size_t a = 0; a < q; ++a) {
    std::vector<VertexSet> cls;
    for (std::size_t b = 0; b < q; ++b) {
      std::vector<Vertex> line;
      for (std::size_t x = 0; x < q; ++x) line.push_back(point(x, f.add(f.mul(a, x), b)));
      cls.emplace_back(std::move(line));
    }
    d.classes.push_back(std::move(cls));
  }
  std::vector<VertexSet> verticals;
  for (std::size_t c = 0; c < q; ++c) {
    std::vector<Vertex> line;
    for (std::size_t y = 0; y < q; ++y) line.push_back(point(c, y));
    verticals.emplace_back(std::move(line));
  }
  d.classes.push_back(std::move(verticals));
  return d;
}

std::size_t DesignReport::count(DesignIssueKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [kind](const DesignIssue& i) { return i.kind == kind; }));
}

DesignReport validate_design(const ResolvableDesign& d) {
  DesignReport report;
  auto add = [&](DesignIssueKind k, std::string detail) { report.issues.push_back({k, std::move(detail)}); };
  const std::size_t n = d.point_count;
  std::vector<std::uint32_t> pair_count(n * n, 0);

  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    std::vector<std::uint32_t> seen(n, 0);
    for (std::size_t b = 0; b < d.classes[c].size(); ++b) {
      const auto& block = d.classes[c][b].members();
      const std::string where = "class " + std::to_string(c) + " block " + std::to_string(b);
      if (block.size() != d.block_size)
        add(DesignIssueKind::bad_block_size,
            where + " has " + std::to_string(block.size()) + " points, expected " + std::to_string(d.block_size));
      bool in_range = true;
      for (Vertex p : block)
        if (p >= n) {
          add(DesignIssueKind::point_out_of_range, where + " contains point " + std::to_string(p));
          in_range = false;
        }
      if (!in_range) continue;
      for (std::size_t i = 0; i < block.size(); ++i) {
        ++seen[block[i]];
        for (std::size_t j = i + 1; j < block.size(); ++j) ++pair_count[block[i] * n + block[j]];
      }
    }
    for (std::size_t p = 0; p < n; ++p)
      if (seen[p] != 1)
        add(DesignIssueKind::not_a_partition, "class " + std::to_string(c) + " covers point " + std::to_string(p) + " " +
                                                  std::to_string(seen[p]) + " times");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto k = pair_count[a * n + b];
      const std::string pair = "pair {" + std::to_string(a) + "," + std::to_string(b) + "}";
      if (k == 0) add(DesignIssueKind::pair_uncovered, pair + " uncovered");
      else if (k > 1) add(DesignIssueKind::pair_repeated, pair + " covered " + std::to_string(k) + " times");
    }

  if (d.block_size < 2 || n < 2 || (n - 1) % (d.block_size - 1) != 0) {
    add(DesignIssueKind::class_count, "no resolvable S(" + std::to_string(n) + "," + std::to_string(d.block_size) +
                                          ",2) class count: (points-1) not divisible by (block_size-1)");
  } else if (d.classes.size() != (n - 1) / (d.block_size - 1)) {
    add(DesignIssueKind::class_count, "design has " + std::to_string(d.classes.size()) + " classes, expected " +
                                          std::to_string((n - 1) / (d.block_size - 1)));
  }
  return report;
}

std::string_view to_string(DesignIssueKind kind) noexcept {
  switch (kind) {
    case DesignIssueKind::bad_block_size: return "bad_block_size";
    case DesignIssueKind::point_out_of_range: return "point_out_of_range";
    case DesignIssueKind::not_a_partition: return "not_a_partition";
    case DesignIssueKind::pair_uncovered: return "pair_uncovered";
    case DesignIssueKind::pair_repeated: return "pair_repeated";
    case DesignIssueKind::class_count: return "class_count";
  }
  return "unknown";
}

}  // namespace fullgraph
