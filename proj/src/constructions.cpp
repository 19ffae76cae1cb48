#include "berge/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "berge/berge.hpp"
#include "berge/error.hpp"

namespace berge {

auto SplitMix64::next() -> std::uint64_t {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

auto SplitMix64::below(std::uint64_t bound) -> std::uint64_t {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

auto kr_construction(int n, int r) -> Hypergraph {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "kr_construction needs r >= 2");
  if (n < 0 || n % r != 0)
    throw Error(ErrorCode::InvalidArgument, "kr_construction needs r | n (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  const int q = n / r;
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(q) * q);
  for (int s = 0; s < q; ++s) {
    for (int j = 0; j < q; ++j) {
      std::vector<int> e{s};
      const int first = q + j * (r - 1);
      for (int t = 0; t < r - 1; ++t) e.push_back(first + t);
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(n, std::move(edges));
}

auto single_edge(int n) -> Hypergraph {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "single_edge needs n >= 1");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[v] = v;
  return Hypergraph(n, {std::move(all)});
}

namespace {

auto family_size(int n, int s_min, int s_max, std::uint64_t limit) -> std::uint64_t {
  std::uint64_t total = 0;
  for (int s = s_min; s <= s_max; ++s) {
    std::uint64_t c = 1;
    for (int i = 1; i <= s; ++i) {
      // C(n, i) = C(n, i-1) * (n - i + 1) / i; stop once past the limit.
      const unsigned __int128 wide = static_cast<unsigned __int128>(c) * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
      if (wide > limit) return limit + 1;
      c = static_cast<std::uint64_t>(wide);
    }
    total += c;
    if (total > limit) return limit + 1;
  }
  return total;
}

void all_subsets(int n, int s, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == s) {
    out.push_back(current);
    return;
  }
  for (int v = start; v <= n - (s - static_cast<int>(current.size())); ++v) {
    current.push_back(v);
    all_subsets(n, s, v + 1, current, out);
    current.pop_back();
  }
}

auto random_subset(int n, int s, SplitMix64& rng) -> std::vector<int> {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) pool[v] = v;
  for (int i = 0; i < s; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(s));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

auto greedy_maximal(int n, const Graph& pattern, const GreedyOptions& options) -> GreedyResult {
  if (options.s_min < 2 || options.s_min > options.s_max || options.s_max > n)
    throw Error(ErrorCode::InvalidArgument, "greedy_maximal needs 2 <= s_min <= s_max <= n");
  if (options.draws_per_n2 < 1) throw Error(ErrorCode::InvalidArgument, "draws_per_n2 must be positive");

  GreedyResult result{Hypergraph(n), 0, 0, false};
  // Containment is monotone: if the empty hypergraph already holds a Berge-F
  // (edgeless patterns), no candidate can ever be added.
  if (contains_berge(result.hypergraph, pattern)) return result;

  SplitMix64 rng(options.seed);
  const std::uint64_t budget = static_cast<std::uint64_t>(options.draws_per_n2) * static_cast<std::uint64_t>(n) * n;
  std::vector<std::vector<int>> stream;
  if (family_size(n, options.s_min, options.s_max, budget) <= budget) {
    result.enumerated_all = true;
    std::vector<int> current;
    for (int s = options.s_min; s <= options.s_max; ++s) all_subsets(n, s, 0, current, stream);
    for (std::size_t i = stream.size(); i > 1; --i) std::swap(stream[i - 1], stream[rng.below(i)]);
  }

  // Both sets only grow: a rejected candidate stays rejected because adding
  // hyperedges never removes a Berge copy.
  std::set<std::vector<int>> present;
  std::set<std::vector<int>> refused;
  Hypergraph& h = result.hypergraph;
  const std::uint64_t total = result.enumerated_all ? stream.size() : budget;
  const auto span = static_cast<std::uint64_t>(options.s_max - options.s_min + 1);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::vector<int> candidate;
    if (result.enumerated_all) {
      candidate = std::move(stream[i]);
    } else {
      const int s = options.s_min + static_cast<int>(rng.below(span));
      candidate = random_subset(n, s, rng);
    }
    ++result.candidates;
    if (present.contains(candidate)) continue;
    if (refused.contains(candidate)) {
      ++result.rejected;
      continue;
    }
    Hypergraph next = h.with_edge(candidate);
    if (contains_berge_using(next, pattern, next.edge_count() - 1)) {
      ++result.rejected;
      refused.insert(std::move(candidate));
      continue;
    }
    present.insert(std::move(candidate));
    h = std::move(next);
  }
  return result;
}

}  // namespace berge
