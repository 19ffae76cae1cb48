#pragma once

// Brute-force reference implementations. Deliberately naive: no pruning, no
// shared code with the library beyond reading edge lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>;

inline auto pairs_of(const berge::Graph& g) -> Pairs {
  Pairs out;
  for (auto e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Calls visit(map) for every injective map of k pattern vertices into 0..n-1.
inline void for_each_injection(int k, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> map(k, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      visit(map);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[i] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(0);
}

inline auto in_edge(const std::vector<int>& h, int v) -> bool { return std::find(h.begin(), h.end(), v) != h.end(); }

// Tries every injective assignment of pattern edges to hyperedges.
inline auto assignment_exists(const std::vector<std::vector<int>>& hyper, const Pairs& need) -> bool {
  std::vector<bool> used(hyper.size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == need.size()) return true;
    for (std::size_t j = 0; j < hyper.size(); ++j) {
      if (used[j] || !in_edge(hyper[j], need[i].first) || !in_edge(hyper[j], need[i].second)) continue;
      used[j] = true;
      const bool ok = rec(i + 1);
      used[j] = false;
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

inline auto contains_berge(const berge::Hypergraph& h, const berge::Graph& f) -> bool {
  const int k = f.vertex_count();
  if (k > h.vertex_count()) return false;
  const Pairs fe = pairs_of(f);
  if (fe.size() > h.edge_count()) return false;
  bool found = false;
  for_each_injection(k, h.vertex_count(), [&](const std::vector<int>& map) {
    if (found) return;
    Pairs need;
    for (auto [a, b] : fe) need.emplace_back(map[a], map[b]);
    found = assignment_exists(h.edges(), need);
  });
  return found;
}

inline auto has_edge(const Pairs& edges, int a, int b) -> bool {
  if (a > b) std::swap(a, b);
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

inline auto count_maps(const berge::Graph& host, const berge::Graph& f) -> std::uint64_t {
  const Pairs he = pairs_of(host);
  const Pairs fe = pairs_of(f);
  std::uint64_t count = 0;
  for_each_injection(f.vertex_count(), host.vertex_count(), [&](const std::vector<int>& map) {
    for (auto [a, b] : fe)
      if (!has_edge(he, map[a], map[b])) return;
    ++count;
  });
  return count;
}

// Copies of F in `host` (as subgraphs, identified by vertex set and edge set).
inline auto count_copies(const berge::Graph& host, const berge::Graph& f) -> std::uint64_t {
  return count_maps(host, f) / count_maps(f, f);
}

inline auto contains_graph(const berge::Graph& host, const berge::Graph& f) -> bool { return count_maps(host, f) > 0; }

// Graph on n vertices whose edges are the set bits of `code` over pairs in
// lexicographic order.
inline auto graph_from_code(int n, std::uint64_t code) -> berge::Graph {
  std::vector<berge::Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1U) edges.push_back({u, v});
  return berge::Graph(n, edges);
}

// True when every red/blue colouring of K_n has a red F or a blue G.
inline auto every_coloring_forces(int n, const berge::Graph& f, const berge::Graph& g) -> bool {
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const auto red = graph_from_code(n, code);
    if (!contains_graph(red, f) && !contains_graph(red.complement(), g)) return false;
  }
  return true;
}

inline auto ex(int n, const berge::Graph& f) -> int {
  const int pairs = n * (n - 1) / 2;
  int best = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const int edges = std::popcount(code);
    if (edges <= best) continue;
    if (!contains_graph(graph_from_code(n, code), f)) best = edges;
  }
  return best;
}

// All subsets of 0..n-1 with size in [lo, hi].
inline auto candidates(int n, int lo, int hi) -> std::vector<std::vector<int>> {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int c = std::popcount(mask);
    if (c < lo || c > hi) continue;
    std::vector<int> h;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) h.push_back(v);
    out.push_back(h);
  }
  return out;
}

// Max of sum w(|h|) over Berge-F-free multisets with each candidate used at
// most `cap` times, by full enumeration of multiplicity vectors.
template <class W>
auto max_weight(int n, const berge::Graph& f, int lo, int hi, int cap, W weight) -> std::int64_t {
  const auto cand = candidates(n, lo, hi);
  std::vector<int> mult(cand.size(), 0);
  std::int64_t best = 0;
  while (true) {
    std::vector<std::vector<int>> edges;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (int c = 0; c < mult[i]; ++c) {
        edges.push_back(cand[i]);
        total += weight(static_cast<int>(cand[i].size()));
      }
    if (total > best && !oracle::contains_berge(berge::Hypergraph(n, edges), f)) best = total;
    std::size_t i = 0;
    while (i < mult.size() && mult[i] == cap) mult[i++] = 0;
    if (i == mult.size()) break;
    ++mult[i];
  }
  return best;
}

}  // namespace oracle
