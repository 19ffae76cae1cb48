#pragma once

// Backtracking embedder shared by the copy enumerator, the Berge detector and
// the orderly graph searches. A visitor observes every partial placement and
// can prune; see search_embeddings().

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "berge/embed.hpp"

namespace berge::detail {

enum class SearchOutcome { Exhausted, Stopped, Truncated };

/**
 * Visitor requirements:
 *   bool extend(int pos, std::span<const int> map);  // false prunes the subtree
 *   bool complete(std::span<const int> map);         // false stops the search
 * `map` is indexed by pattern vertex; unplaced entries hold -1.
 * `pinned[i]` is the host image required for plan.vertex_at(i).
 */
template <class Visitor>
class Embedder {
 public:
  Embedder(const EmbeddingPlan& plan, HostView host, std::span<const int> pinned, Visitor& visitor,
           std::uint64_t max_nodes)
      : plan_(plan), host_(host), pinned_(pinned), visitor_(visitor), max_nodes_(max_nodes) {
    const int k = plan.size();
    map_.assign(static_cast<std::size_t>(k), -1);
    used_.assign(static_cast<std::size_t>(host.words), 0);
    candidates_.assign(static_cast<std::size_t>(k) * host.words, 0);
    host_degree_.resize(static_cast<std::size_t>(host.n));
    for (int v = 0; v < host.n; ++v) host_degree_[v] = popcount(host.row(v));
  }

  auto run() -> SearchOutcome {
    if (plan_.size() > host_.n) return SearchOutcome::Exhausted;
    if (!descend(0)) return truncated_ ? SearchOutcome::Truncated : SearchOutcome::Stopped;
    return SearchOutcome::Exhausted;
  }

  auto nodes() const -> std::uint64_t { return nodes_; }

 private:
  auto descend(int pos) -> bool {
    if (pos == plan_.size()) return visitor_.complete(map_);
    const int x = plan_.vertex_at(pos);
    const std::size_t words = static_cast<std::size_t>(host_.words);
    std::span<Word> cand{candidates_.data() + static_cast<std::size_t>(pos) * words, words};

    auto back = plan_.back_neighbors(pos);
    if (back.empty()) {
      for (std::size_t w = 0; w < words; ++w) cand[w] = ~Word{0};
      const int tail = host_.n % kBitsPerWord;
      if (tail != 0) cand[words - 1] = (Word{1} << tail) - 1;
    } else {
      auto first = host_.row(map_[back[0]]);
      std::copy(first.begin(), first.end(), cand.begin());
      for (std::size_t i = 1; i < back.size(); ++i) {
        auto r = host_.row(map_[back[i]]);
        for (std::size_t w = 0; w < words; ++w) cand[w] &= r[w];
      }
    }
    for (std::size_t w = 0; w < words; ++w) cand[w] &= ~used_[w];

    if (static_cast<std::size_t>(pos) < pinned_.size()) {
      const int h = pinned_[pos];
      const bool ok = h >= 0 && h < host_.n && test_bit(cand, h);
      for (std::size_t w = 0; w < words; ++w) cand[w] = 0;
      if (ok) set_bit(cand, h);
    }

    const int need = plan_.pattern_degree(x);
    for (std::size_t w = 0; w < words; ++w) {
      Word bits = cand[w];
      while (bits != 0) {
        const int h = static_cast<int>(w) * kBitsPerWord + std::countr_zero(bits);
        bits &= bits - 1;
        if (host_degree_[h] < need) continue;
        if (max_nodes_ != 0 && nodes_ >= max_nodes_) {
          truncated_ = true;
          return false;
        }
        ++nodes_;
        map_[x] = h;
        set_bit(used_, h);
        const bool keep_going = !visitor_.extend(pos, map_) || descend(pos + 1);
        clear_bit(used_, h);
        map_[x] = -1;
        if (!keep_going) return false;
      }
    }
    return true;
  }

  const EmbeddingPlan& plan_;
  HostView host_;
  std::span<const int> pinned_;
  Visitor& visitor_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
  std::vector<int> map_;
  std::vector<Word> used_;
  std::vector<Word> candidates_;
  std::vector<int> host_degree_;
};

template <class Visitor>
auto search_embeddings(const EmbeddingPlan& plan, HostView host, std::span<const int> pinned, Visitor& visitor,
                       std::uint64_t max_nodes = 0, std::uint64_t* nodes = nullptr) -> SearchOutcome {
  Embedder<Visitor> embedder(plan, host, pinned, visitor, max_nodes);
  const SearchOutcome outcome = embedder.run();
  if (nodes != nullptr) *nodes += embedder.nodes();
  return outcome;
}

/// Visitor that accepts every partial placement and stores the first full map.
struct FirstMap {
  VertexMap found;
  bool extend(int, std::span<const int>) { return true; }
  bool complete(std::span<const int> map) {
    found.assign(map.begin(), map.end());
    return false;
  }
};

}  // namespace berge::detail
