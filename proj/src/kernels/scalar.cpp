#include <bit>

#include "kernels_impl.hpp"

namespace berge::kernels::detail {
namespace {

auto count_supersets(const VertexMask* sets, std::size_t count, VertexMask mask) -> std::size_t {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < count; ++i) hits += sets[i].contains(mask) ? 1 : 0;
  return hits;
}

void superset_indices(const VertexMask* sets, std::size_t count, VertexMask mask,
                      std::vector<std::uint32_t>& out) {
  for (std::size_t i = 0; i < count; ++i)
    if (sets[i].contains(mask)) out.push_back(static_cast<std::uint32_t>(i));
}

auto and_popcount(const Word* a, const Word* b, std::size_t words) -> std::uint64_t {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

void add_bits(std::uint32_t* counts, std::size_t count, const Word* bits) {
  for (std::size_t i = 0; i < count; ++i) counts[i] += (bits[i >> 6] >> (i & 63)) & 1U;
}

}  // namespace

auto make_scalar_table() -> KernelTable {
  return {Isa::Scalar, "scalar", &count_supersets, &superset_indices, &and_popcount, &add_bits};
}

}  // namespace berge::kernels::detail
