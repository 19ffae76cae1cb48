#include "berge/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace berge {

IncrementalSdr::IncrementalSdr(std::size_t right_count, int left_count)
    : assigned_(static_cast<std::size_t>(left_count), -1),
      owner_(right_count, -1),
      candidates_(static_cast<std::size_t>(left_count)),
      stamp_(right_count, 0) {}

auto IncrementalSdr::insert(int left, std::span<const std::uint32_t> candidates) -> bool {
  candidates_[left] = candidates;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  return augment(left);
}

void IncrementalSdr::erase(int left) {
  if (assigned_[left] >= 0) owner_[assigned_[left]] = -1;
  assigned_[left] = -1;
  candidates_[left] = {};
}

void IncrementalSdr::restore(const std::vector<int>& assignment) {
  for (int r : assigned_)
    if (r >= 0) owner_[r] = -1;
  assigned_ = assignment;
  for (std::size_t l = 0; l < assigned_.size(); ++l)
    if (assigned_[l] >= 0) owner_[assigned_[l]] = static_cast<int>(l);
}

auto IncrementalSdr::augment(int left) -> bool {
  for (std::uint32_t r : candidates_[left]) {
    if (stamp_[r] == epoch_) continue;
    stamp_[r] = epoch_;
    const int holder = owner_[r];
    if (holder < 0 || augment(holder)) {
      if (assigned_[left] >= 0 && owner_[assigned_[left]] == left) owner_[assigned_[left]] = -1;
      assigned_[left] = static_cast<int>(r);
      owner_[r] = left;
      return true;
    }
  }
  return false;
}

auto hopcroft_karp(const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t right_count)
    -> std::vector<int> {
  const std::size_t left_count = adjacency.size();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_left(left_count, -1);
  std::vector<int> match_right(right_count, -1);
  std::vector<int> dist(left_count, kInf);

  auto bfs = [&]() -> bool {
    std::queue<std::size_t> queue;
    for (std::size_t l = 0; l < left_count; ++l) {
      dist[l] = match_left[l] < 0 ? 0 : kInf;
      if (match_left[l] < 0) queue.push(l);
    }
    bool reachable_free = false;
    while (!queue.empty()) {
      const std::size_t l = queue.front();
      queue.pop();
      for (std::uint32_t r : adjacency[l]) {
        const int next = match_right[r];
        if (next < 0) {
          reachable_free = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push(static_cast<std::size_t>(next));
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, std::size_t l) -> bool {
    for (std::uint32_t r : adjacency[l]) {
      const int next = match_right[r];
      if (next < 0 || (dist[next] == dist[l] + 1 && self(self, static_cast<std::size_t>(next)))) {
        match_left[l] = static_cast<int>(r);
        match_right[r] = static_cast<int>(l);
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs())
    for (std::size_t l = 0; l < left_count; ++l)
      if (match_left[l] < 0) dfs(dfs, l);
  return match_left;
}

}  // namespace berge
