#include <doctest.h>

#include <random>

#include "fullgraph/designs.hpp"
#include "fullgraph/error.hpp"

using namespace fullgraph;

namespace {

void check_field_axioms(const FieldTable& f) {
  const std::size_t q = f.q;
  std::mt19937_64 rng(q);
  std::uniform_int_distribution<std::size_t> pick(0, q - 1);
  for (std::size_t a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.mul(a, 0) == 0);
    std::size_t neg = 0, inv = 0;
    for (std::size_t b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      neg += f.add(a, b) == 0;
      inv += f.mul(a, b) == 1;
    }
    CHECK(neg == 1);
    CHECK(inv == (a == 0 ? 0U : 1U));
  }
  for (int i = 0; i < 300; ++i) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
}

}  // namespace

TEST_CASE("prime fields") {
  const FieldTable f2 = field(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.mul(1, 1) == 1);
  const FieldTable f5 = field(5);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.add(3, 4) == 2);
  for (std::size_t p : {2, 3, 5, 7, 11, 13, 31, 61}) check_field_axioms(field(p));
}

TEST_CASE("extension fields from the built-in polynomials") {
  const FieldTable f4 = field(4);
  CHECK(f4.characteristic == 2);
  CHECK(f4.mul(2, 3) == 1);  // x * (x + 1) = x^2 + x = 1 mod x^2 + x + 1
  CHECK(f4.mul(2, 2) == 3);  // x^2 = x + 1
  const FieldTable f9 = field(9);
  CHECK(f9.mul(3, 3) == 2);  // x^2 = -1 = 2 mod x^2 + 1
  for (std::size_t q : supported_prime_powers()) check_field_axioms(field(q));
}

TEST_CASE("unsupported orders name the limit") {
  for (std::size_t q : {0, 1, 6, 10, 12, 32, 49, 67}) {
    CHECK_FALSE(field_supported(q));
    CHECK_THROWS_AS(field(q), UnsupportedOrder);
  }
  try {
    field(6);
  } catch (const UnsupportedOrder& e) {
    CHECK(std::string(e.what()).find("61") != std::string::npos);
  }
}

TEST_CASE("affine planes are resolvable Steiner systems") {
  const ResolvableDesign a2 = affine_plane(2);
  CHECK(a2.point_count == 4);
  CHECK(a2.classes.size() == 3);
  std::size_t blocks = 0;
  for (const auto& c : a2.classes) blocks += c.size();
  CHECK(blocks == 6);

  for (std::size_t q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27}) {
    CAPTURE(q);
    const ResolvableDesign d = affine_plane(q);
    CHECK(d.point_count == q * q);
    CHECK(d.block_size == q);
    CHECK(d.classes.size() == q + 1);
    std::size_t pair_total = 0;
    for (const auto& c : d.classes) {
      CHECK(c.size() == q);
      pair_total += c.size() * q * (q - 1) / 2;
    }
    CHECK(pair_total == q * q * (q * q - 1) / 2);
    CHECK(validate_design(d).valid());
  }
}

TEST_CASE("affine plane layout: slopes first, verticals last") {
  const ResolvableDesign d = affine_plane(3);
  // slope 0, intercept 1: points (x, 1) = x*3 + 1
  CHECK(d.classes[0][1] == VertexSet{1, 4, 7});
  // vertical x = 2
  CHECK(d.classes[3][2] == VertexSet{6, 7, 8});
}

TEST_CASE("validate_design reports defects") {
  ResolvableDesign d = affine_plane(3);
  d.classes[1].pop_back();
  DesignReport r = validate_design(d);
  CHECK_FALSE(r.valid());
  CHECK(r.count(DesignIssueKind::pair_uncovered) == 3);
  CHECK(r.count(DesignIssueKind::not_a_partition) >= 1);

  d = affine_plane(3);
  d.classes[2].push_back(d.classes[2][0]);
  r = validate_design(d);
  CHECK(r.count(DesignIssueKind::pair_repeated) == 3);

  d = affine_plane(3);
  d.classes.pop_back();
  r = validate_design(d);
  CHECK(r.count(DesignIssueKind::class_count) == 1);

  d = affine_plane(2);
  d.classes[0][0] = VertexSet{0, 1, 5};
  r = validate_design(d);
  CHECK(r.count(DesignIssueKind::point_out_of_range) == 1);
  CHECK(r.count(DesignIssueKind::bad_block_size) == 1);
}
