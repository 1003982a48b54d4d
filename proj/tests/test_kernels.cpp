#include <random>
#include <vector>

#include "doctest.h"
#include "digitop/graph.hpp"
#include "digitop/simd/kernels.hpp"
#include "digitop/space.hpp"
#include "test_support.hpp"

using namespace digitop;
using namespace digitop::simd;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) {
    x = rng();
    for (int i = 0; i < density; ++i) x &= rng();
  }
  return w;
}

void compare_tables(const BitKernels& ref, const BitKernels& alt) {
  std::mt19937_64 rng(7);
  for (std::size_t len = 0; len <= 37; ++len) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_words(rng, len, rep % 4);
      auto b = random_words(rng, len, (rep + 1) % 4);
      if (rep % 5 == 0)
        for (std::size_t i = 0; i < len; ++i) b[i] |= a[i];
      CHECK(ref.popcount(a) == alt.popcount(a));
      CHECK(ref.and_popcount(a, b) == alt.and_popcount(a, b));
      CHECK(ref.intersects(a, b) == alt.intersects(a, b));
      CHECK(ref.is_subset(a, b) == alt.is_subset(a, b));
      CHECK(ref.is_subset(b, a) == alt.is_subset(b, a));
      std::vector<std::uint64_t> x(len), y(len);
      ref.and_into(x, a, b);
      alt.and_into(y, a, b);
      CHECK(x == y);
      ref.andnot_into(x, a, b);
      alt.andnot_into(y, a, b);
      CHECK(x == y);
      ref.or_into(x, a, b);
      alt.or_into(y, a, b);
      CHECK(x == y);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels match bit-by-bit definitions") {
  const auto& k = scalar_kernels();
  std::vector<std::uint64_t> a{0xF0F0, 0, ~std::uint64_t{0}};
  std::vector<std::uint64_t> b{0xFF00, 1, ~std::uint64_t{0}};
  CHECK(k.popcount(a) == 8 + 64);
  CHECK(k.and_popcount(a, b) == 4 + 64);
  CHECK(k.intersects(a, b));
  CHECK_FALSE(k.is_subset(a, b));
  std::vector<std::uint64_t> d(3);
  k.andnot_into(d, a, b);
  CHECK(d == std::vector<std::uint64_t>{0x00F0, 0, 0});
}

TEST_CASE("avx2 kernels agree with scalar") {
  const BitKernels* avx = avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 unavailable; equivalence not exercised");
    return;
  }
  CHECK(avx->isa == Isa::kAvx2);
  compare_tables(scalar_kernels(), *avx);
}

TEST_CASE("library results do not depend on the active ISA") {
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs;
  for (int i = 0; i < 6; ++i) graphs.push_back(testing::random_graph(rng, 70 + 13 * i, 0.12));
  const Isa original = active_isa();

  REQUIRE(force_isa(Isa::kScalar));
  std::vector<std::vector<std::uint64_t>> scalar_counts;
  for (const auto& g : graphs) scalar_counts.push_back(count_cliques(g, kDefaultCliqueBudget));

  if (force_isa(Isa::kAvx2)) {
    CHECK(active_isa() == Isa::kAvx2);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      CHECK(count_cliques(graphs[i], kDefaultCliqueBudget) == scalar_counts[i]);
  }
  force_isa(original);
}

TEST_CASE("point sets spanning several words") {
  PointSet a(150), b(150);
  for (std::size_t i = 0; i < 150; i += 3) a.set(i);
  for (std::size_t i = 0; i < 150; i += 5) b.set(i);
  CHECK(a.count() == 50);
  CHECK(a.intersection_count(b) == 10);
  CHECK((a & b).count() == 10);
  CHECK((a | b).count() == 50 + 30 - 10);
  CHECK((a - b).count() == 40);
  CHECK((a & b).is_subset_of(a));
  CHECK(a.next(128) == 129);
  CHECK(PointSet(150).first() == 150);
}
