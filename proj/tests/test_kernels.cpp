#include <doctest.h>

#include <random>
#include <vector>

#include "berge/kernels.hpp"

using namespace berge;

namespace {

auto random_masks(std::mt19937_64& rng, std::size_t count, double density) -> std::vector<VertexMask> {
  std::bernoulli_distribution coin(density);
  std::vector<VertexMask> out(count);
  for (auto& m : out)
    for (int v = 0; v < VertexMask::kCapacity; ++v)
      if (coin(rng)) m.set(v);
  return out;
}

}  // namespace

TEST_CASE("scalar kernels on hand cases") {
  const auto& k = kernels::scalar_table();
  std::vector<VertexMask> sets(3);
  sets[0].set(0), sets[0].set(1), sets[0].set(2);
  sets[1].set(1), sets[1].set(2);
  sets[2].set(0), sets[2].set(1), sets[2].set(100);
  const auto pair01 = VertexMask::pair(0, 1);
  CHECK(k.count_supersets(sets.data(), sets.size(), pair01) == 2);
  std::vector<std::uint32_t> idx;
  k.superset_indices(sets.data(), sets.size(), pair01, idx);
  CHECK(idx == std::vector<std::uint32_t>{0, 2});

  const std::vector<Word> a{0b1011, ~Word{0}};
  const std::vector<Word> b{0b0110, Word{1} << 63};
  CHECK(k.and_popcount(a.data(), b.data(), 2) == 2);

  std::vector<std::uint32_t> counts(70, 0);
  const std::vector<Word> bits{Word{1} | (Word{1} << 63), Word{0b10}};
  k.add_bits(counts.data(), counts.size(), bits.data());
  CHECK(counts[0] == 1);
  CHECK(counts[63] == 1);
  CHECK(counts[65] == 1);
  CHECK(counts[1] == 0);
}

TEST_CASE("avx2 kernels match scalar") {
  const auto* fast = kernels::avx2_table();
  if (fast == nullptr) {
    MESSAGE("AVX2 kernels unavailable; skipping equivalence");
    return;
  }
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(7);
  for (std::size_t count : {0, 1, 3, 4, 5, 7, 8, 9, 31, 64, 65, 200}) {
    for (double density : {0.05, 0.5, 0.95}) {
      const auto sets = random_masks(rng, count, density);
      for (int trial = 0; trial < 20; ++trial) {
        VertexMask mask;
        std::uniform_int_distribution<int> v(0, VertexMask::kCapacity - 1);
        for (int i = 0; i < trial % 4; ++i) mask.set(v(rng));
        CHECK(fast->count_supersets(sets.data(), count, mask) == ref.count_supersets(sets.data(), count, mask));
        std::vector<std::uint32_t> x, y;
        fast->superset_indices(sets.data(), count, mask, x);
        ref.superset_indices(sets.data(), count, mask, y);
        CHECK(x == y);
      }
    }
  }
  for (std::size_t words : {0, 1, 2, 3, 4, 5, 8, 13, 64}) {
    std::vector<Word> a(words), b(words);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();
    CHECK(fast->and_popcount(a.data(), b.data(), words) == ref.and_popcount(a.data(), b.data(), words));
    for (std::size_t count : {words * 64, words * 64 > 5 ? words * 64 - 5 : 0}) {
      std::vector<std::uint32_t> c1(count, 3), c2(count, 3);
      fast->add_bits(c1.data(), count, a.data());
      ref.add_bits(c2.data(), count, a.data());
      CHECK(c1 == c2);
    }
  }
}

TEST_CASE("kernel selection") {
  const auto before = kernels::active().isa;
  CHECK(kernels::select(kernels::Isa::Scalar));
  CHECK(kernels::active().isa == kernels::Isa::Scalar);
  CHECK(kernels::select(kernels::Isa::Avx2) == (kernels::avx2_table() != nullptr));
  kernels::select(before);
  CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
}
