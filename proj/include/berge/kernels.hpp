#pragma once

// Data-parallel inner loops over bitsets. Every kernel has a portable scalar
// reference and, on x86-64, an AVX2 variant; the variant is picked once at
// startup from CPUID and can be forced with BERGE_ISA=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "berge/bitset.hpp"

namespace berge::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  /// Number of sets s with (s & mask) == mask.
  std::size_t (*count_supersets)(const VertexMask* sets, std::size_t count, VertexMask mask);

  /// Appends the index of every superset of `mask` to `out` (ascending).
  void (*superset_indices)(const VertexMask* sets, std::size_t count, VertexMask mask,
                           std::vector<std::uint32_t>& out);

  /// popcount(a & b) over equal-length word arrays.
  std::uint64_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);

  /// counts[i] += 1 for every bit i set in `bits` (i < count).
  void (*add_bits)(std::uint32_t* counts, std::size_t count, const Word* bits);
};

auto scalar_table() -> const KernelTable&;

/// Null when the AVX2 variants were not compiled in or the CPU lacks AVX2.
auto avx2_table() -> const KernelTable*;

/// The table selected for this process.
auto active() -> const KernelTable&;

/// Overrides the process-wide selection (tests and benchmarks). Returns false
/// when the requested ISA is unavailable.
auto select(Isa isa) -> bool;

auto isa_name(Isa isa) -> std::string_view;

inline auto count_supersets(std::span<const VertexMask> sets, VertexMask mask) -> std::size_t {
  return active().count_supersets(sets.data(), sets.size(), mask);
}

inline void superset_indices(std::span<const VertexMask> sets, VertexMask mask,
                             std::vector<std::uint32_t>& out) {
  active().superset_indices(sets.data(), sets.size(), mask, out);
}

inline auto and_popcount(std::span<const Word> a, std::span<const Word> b) -> std::uint64_t {
  return active().and_popcount(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void add_bits(std::span<std::uint32_t> counts, std::span<const Word> bits) {
  active().add_bits(counts.data(), counts.size(), bits.data());
}

}  // namespace berge::kernels
