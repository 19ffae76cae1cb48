#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace berge::kernels::detail {
namespace {

// Two VertexMasks per 256-bit lane group; a set is a superset when both of its
// 64-bit halves compare equal after masking.
inline auto superset_bits(const VertexMask* two, __m256i mask) -> int {
  const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(two));
  const __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(x, mask), mask);
  const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
  return ((bits & 0x3) == 0x3 ? 1 : 0) | ((bits & 0xC) == 0xC ? 2 : 0);
}

inline auto broadcast(VertexMask mask) -> __m256i {
  return _mm256_set_epi64x(static_cast<long long>(mask.words[1]), static_cast<long long>(mask.words[0]),
                           static_cast<long long>(mask.words[1]), static_cast<long long>(mask.words[0]));
}

auto count_supersets(const VertexMask* sets, std::size_t count, VertexMask mask) -> std::size_t {
  const __m256i m = broadcast(mask);
  std::size_t hits = 0;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const int lo = superset_bits(sets + i, m);
    const int hi = superset_bits(sets + i + 2, m);
    hits += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(lo | (hi << 2))));
  }
  for (; i < count; ++i) hits += sets[i].contains(mask) ? 1 : 0;
  return hits;
}

void superset_indices(const VertexMask* sets, std::size_t count, VertexMask mask,
                      std::vector<std::uint32_t>& out) {
  const __m256i m = broadcast(mask);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    unsigned bits = static_cast<unsigned>(superset_bits(sets + i, m) | (superset_bits(sets + i + 2, m) << 2));
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(i + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  for (; i < count; ++i)
    if (sets[i].contains(mask)) out.push_back(static_cast<std::uint32_t>(i));
}

// Nibble-table popcount (Mula et al.), accumulated with SAD into 64-bit lanes.
auto and_popcount(const Word* a, const Word* b, std::size_t words) -> std::uint64_t {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0F);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    const __m256i lo = _mm256_shuffle_epi8(table, _mm256_and_si256(x, low));
    const __m256i hi = _mm256_shuffle_epi8(table, _mm256_and_si256(_mm256_srli_epi16(x, 4), low));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  std::uint64_t total = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

void add_bits(std::uint32_t* counts, std::size_t count, const Word* bits) {
  const __m256i lanes = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const unsigned byte = static_cast<unsigned>((bits[i >> 6] >> (i & 63)) & 0xFF);
    if (byte == 0) continue;
    const __m256i b = _mm256_set1_epi32(static_cast<int>(byte));
    const __m256i hit = _mm256_cmpeq_epi32(_mm256_and_si256(b, lanes), lanes);
    __m256i* dst = reinterpret_cast<__m256i*>(counts + i);
    _mm256_storeu_si256(dst, _mm256_sub_epi32(_mm256_loadu_si256(dst), hit));
  }
  for (; i < count; ++i) counts[i] += (bits[i >> 6] >> (i & 63)) & 1U;
}

}  // namespace

auto make_avx2_table() -> KernelTable {
  return {Isa::Avx2, "avx2", &count_supersets, &superset_indices, &and_popcount, &add_bits};
}

}  // namespace berge::kernels::detail
