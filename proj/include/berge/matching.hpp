#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace berge {

/**
 * Augmenting-path matcher for systems of distinct representatives where the
 * left side grows one vertex at a time (pattern edges as they become fully
 * mapped) and shrinks again on backtracking. Right vertices are hyperedge
 * indices. Candidate spans must outlive the matcher's use of them.
 */
class IncrementalSdr {
 public:
  IncrementalSdr(std::size_t right_count, int left_count);

  /// Activates `left` with the given candidates and augments. On failure the
  /// previous matching is left untouched and `left` stays inactive.
  auto insert(int left, std::span<const std::uint32_t> candidates) -> bool;

  /// Deactivates `left`; its representative becomes free.
  void erase(int left);

  auto representative(int left) const -> int { return assigned_[left]; }
  auto assignment() const -> const std::vector<int>& { return assigned_; }

  /// Restores an assignment previously obtained from assignment().
  void restore(const std::vector<int>& assignment);

 private:
  auto augment(int left) -> bool;

  std::vector<int> assigned_;
  std::vector<int> owner_;
  std::vector<std::span<const std::uint32_t>> candidates_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

/// Maximum bipartite matching by Hopcroft-Karp. Returns match[left] (-1 when
/// unmatched).
auto hopcroft_karp(const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t right_count)
    -> std::vector<int>;

}  // namespace berge
