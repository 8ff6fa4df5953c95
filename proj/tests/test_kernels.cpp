#include <doctest.h>

#include <random>
#include <vector>

#include "fullgraph/kernels.hpp"

using namespace fullgraph::kernels;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> v(n);
  for (auto& w : v) w = rng();
  return v;
}

std::size_t naive_popcount(const std::vector<Word>& a) {
  std::size_t c = 0;
  for (Word w : a)
    for (int b = 0; b < 64; ++b) c += (w >> b) & 1U;
  return c;
}

void check_equivalent(const KernelTable& t) {
  const KernelTable& ref = scalar_table();
  std::mt19937_64 rng(7);
  for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100}) {
    for (int rep = 0; rep < 20; ++rep) {
      auto a = random_words(rng, n), b = random_words(rng, n);
      if (rep % 5 == 0) std::fill(b.begin(), b.end(), 0);  // exercise the disjoint case
      CHECK(t.popcount(a.data(), n) == naive_popcount(a));
      CHECK(t.popcount(a.data(), n) == ref.popcount(a.data(), n));
      CHECK(t.and_popcount(a.data(), b.data(), n) == ref.and_popcount(a.data(), b.data(), n));
      CHECK(t.intersects(a.data(), b.data(), n) == ref.intersects(a.data(), b.data(), n));
      for (auto op : {&KernelTable::and_into, &KernelTable::andnot_into, &KernelTable::or_into}) {
        auto x = a, y = a;
        (t.*op)(x.data(), b.data(), n);
        (ref.*op)(y.data(), b.data(), n);
        CHECK(x == y);
      }
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels agree with bit-by-bit counting") {
  std::mt19937_64 rng(1);
  auto a = random_words(rng, 13), b = random_words(rng, 13);
  const auto& s = scalar_table();
  std::vector<Word> both(13);
  for (int i = 0; i < 13; ++i) both[i] = a[i] & b[i];
  CHECK(s.and_popcount(a.data(), b.data(), 13) == naive_popcount(both));
  auto c = a;
  s.andnot_into(c.data(), b.data(), 13);
  for (int i = 0; i < 13; ++i) CHECK(c[i] == (a[i] & ~b[i]));
}

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!isa_supported(Isa::avx2)) {
    MESSAGE("avx2 not available on this machine; equivalence not exercised");
    return;
  }
  REQUIRE(table_for(Isa::avx2) != nullptr);
  check_equivalent(*table_for(Isa::avx2));
}

TEST_CASE("dispatch picks a supported table") {
  const KernelTable& t = active();
  CHECK(isa_supported(t.isa));
  CHECK(table_for(Isa::scalar) == &scalar_table());
  CHECK(isa_name(Isa::scalar) == "scalar");
  CHECK(isa_name(Isa::avx2) == "avx2");
  check_equivalent(t);
}
