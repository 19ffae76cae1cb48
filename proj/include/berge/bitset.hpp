#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace berge {

using Word = std::uint64_t;
inline constexpr int kBitsPerWord = 64;

constexpr auto words_for(int bits) -> int { return (bits + kBitsPerWord - 1) / kBitsPerWord; }

/**
 * Fixed 128-bit vertex set. Hypergraphs on at most 128 vertices keep one of
 * these per hyperedge so containment tests are two word operations.
 */
struct VertexMask {
  static constexpr int kCapacity = 128;

  std::array<Word, 2> words{};

  constexpr void set(int v) { words[v >> 6] |= Word{1} << (v & 63); }
  constexpr void reset(int v) { words[v >> 6] &= ~(Word{1} << (v & 63)); }
  constexpr auto test(int v) const -> bool { return (words[v >> 6] >> (v & 63)) & 1U; }
  constexpr auto count() const -> int { return std::popcount(words[0]) + std::popcount(words[1]); }
  constexpr auto empty() const -> bool { return (words[0] | words[1]) == 0; }

  /// True when every vertex of `sub` is in this set.
  constexpr auto contains(const VertexMask& sub) const -> bool {
    return (words[0] & sub.words[0]) == sub.words[0] && (words[1] & sub.words[1]) == sub.words[1];
  }

  friend constexpr auto operator&(VertexMask a, const VertexMask& b) -> VertexMask {
    a.words[0] &= b.words[0];
    a.words[1] &= b.words[1];
    return a;
  }
  friend constexpr auto operator|(VertexMask a, const VertexMask& b) -> VertexMask {
    a.words[0] |= b.words[0];
    a.words[1] |= b.words[1];
    return a;
  }
  friend constexpr auto operator==(const VertexMask&, const VertexMask&) -> bool = default;

  static constexpr auto pair(int u, int v) -> VertexMask {
    VertexMask m;
    m.set(u);
    m.set(v);
    return m;
  }
};

/// Calls `f(bit)` for every set bit of a word span, in ascending order.
template <class F>
void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word bits = words[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      f(static_cast<int>(w) * kBitsPerWord + b);
      bits &= bits - 1;
    }
  }
}

inline auto popcount(std::span<const Word> words) -> int {
  int total = 0;
  for (Word w : words) total += std::popcount(w);
  return total;
}

inline auto test_bit(std::span<const Word> words, int bit) -> bool {
  return (words[bit >> 6] >> (bit & 63)) & 1U;
}

inline void set_bit(std::span<Word> words, int bit) { words[bit >> 6] |= Word{1} << (bit & 63); }

inline void clear_bit(std::span<Word> words, int bit) { words[bit >> 6] &= ~(Word{1} << (bit & 63)); }

/// Growable bitset for vertex sets of unbounded size.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(int bits) : bits_(bits), words_(words_for(bits), 0) {}

  auto size() const -> int { return bits_; }
  void set(int b) { set_bit(words_, b); }
  void reset(int b) { clear_bit(words_, b); }
  auto test(int b) const -> bool { return test_bit(words_, b); }
  auto count() const -> int { return popcount(words_); }
  auto words() const -> std::span<const Word> { return words_; }
  auto words() -> std::span<Word> { return words_; }

  friend auto operator==(const DynamicBitset&, const DynamicBitset&) -> bool = default;

 private:
  int bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace berge
