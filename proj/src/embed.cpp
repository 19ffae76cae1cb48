#include "berge/embed.hpp"

#include <algorithm>

#include "berge/detail/embedder.hpp"
#include "berge/error.hpp"

namespace berge {

EmbeddingPlan::EmbeddingPlan(const Graph& pattern, std::span<const int> pinned) {
  const int k = pattern.vertex_count();
  degree_.resize(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) degree_[v] = pattern.degree(v);

  std::vector<char> placed(static_cast<std::size_t>(k), 0);
  std::vector<int> placed_neighbors(static_cast<std::size_t>(k), 0);
  auto place = [&](int v) {
    order_.push_back(v);
    placed[v] = 1;
    for (int u = 0; u < k; ++u)
      if (pattern.has_edge(u, v)) ++placed_neighbors[u];
  };
  for (int v : pinned) {
    if (v < 0 || v >= k || placed[v]) throw Error(ErrorCode::InvalidArgument, "invalid pinned pattern vertex");
    place(v);
  }
  while (static_cast<int>(order_.size()) < k) {
    int best = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_neighbors[v] > placed_neighbors[best] ||
          (placed_neighbors[v] == placed_neighbors[best] && degree_[v] > degree_[best]))
        best = v;
    }
    place(best);
  }

  std::vector<int> position(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) position[order_[i]] = i;
  back_.resize(static_cast<std::size_t>(k));
  completed_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (pattern.has_edge(order_[i], order_[j])) back_[i].push_back(order_[j]);
  const auto edges = pattern.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    completed_[std::max(position[edges[e].u], position[edges[e].v])].push_back(static_cast<int>(e));
}

namespace {

struct CollectAll {
  std::vector<VertexMap> maps;
  bool extend(int, std::span<const int>) { return true; }
  bool complete(std::span<const int> map) {
    maps.emplace_back(map.begin(), map.end());
    return true;
  }
};

struct CanonicalStream {
  const std::vector<VertexMap>& auts;
  const std::function<bool(std::span<const int>)>& visit;
  std::uint64_t copies = 0;
  bool stopped = false;

  bool extend(int, std::span<const int>) { return true; }
  bool complete(std::span<const int> map) {
    if (!is_canonical_copy(map, auts)) return true;
    ++copies;
    if (!visit(map)) {
      stopped = true;
      return false;
    }
    return true;
  }
};

auto pinned_search(HostView host, const Graph& pattern, std::span<const int> pattern_vertices,
                   std::span<const int> images) -> std::optional<VertexMap> {
  EmbeddingPlan plan(pattern, pattern_vertices);
  detail::FirstMap first;
  if (detail::search_embeddings(plan, host, images, first) == detail::SearchOutcome::Stopped) return first.found;
  return std::nullopt;
}

}  // namespace

auto automorphisms(const Graph& pattern) -> std::vector<VertexMap> {
  EmbeddingPlan plan(pattern);
  CollectAll all;
  detail::search_embeddings(plan, HostView::of(pattern), {}, all);
  return std::move(all.maps);
}

auto is_canonical_copy(std::span<const int> map, const std::vector<VertexMap>& auts) -> bool {
  const std::size_t k = map.size();
  for (const auto& sigma : auts) {
    for (std::size_t x = 0; x < k; ++x) {
      const int image = map[sigma[x]];
      if (image < map[x]) return false;
      if (image > map[x]) break;
    }
  }
  return true;
}

auto for_each_copy(const Graph& host, const Graph& pattern, const std::function<bool(std::span<const int>)>& visit,
                   const CopyOptions& options) -> CopyStats {
  const auto auts = automorphisms(pattern);
  EmbeddingPlan plan(pattern);
  CanonicalStream stream{auts, visit};
  CopyStats stats;
  const auto outcome = detail::search_embeddings(plan, HostView::of(host), {}, stream, options.max_nodes, &stats.nodes);
  stats.copies = stream.copies;
  stats.truncated = outcome == detail::SearchOutcome::Truncated;
  stats.stopped = stream.stopped;
  return stats;
}

auto find_embeddings(const Graph& host, const Graph& pattern) -> std::vector<VertexMap> {
  std::vector<VertexMap> out;
  for_each_copy(host, pattern, [&](std::span<const int> map) {
    out.emplace_back(map.begin(), map.end());
    return true;
  });
  return out;
}

auto count_copies(const Graph& host, const Graph& pattern) -> std::uint64_t {
  std::uint64_t count = 0;
  for_each_copy(host, pattern, [&](std::span<const int>) {
    if (count == UINT64_MAX) throw Error(ErrorCode::Overflow, "copy count overflows 64 bits");
    ++count;
    return true;
  });
  return count;
}

auto find_copy(HostView host, const Graph& pattern) -> std::optional<VertexMap> {
  return pinned_search(host, pattern, {}, {});
}

auto find_copy(const Graph& host, const Graph& pattern) -> std::optional<VertexMap> {
  return find_copy(HostView::of(host), pattern);
}

auto find_copy_through_vertex(HostView host, const Graph& pattern, int v) -> std::optional<VertexMap> {
  for (int x = 0; x < pattern.vertex_count(); ++x) {
    const int px[1] = {x};
    const int hv[1] = {v};
    if (auto found = pinned_search(host, pattern, px, hv)) return found;
  }
  return std::nullopt;
}

auto find_copy_through_edge(HostView host, const Graph& pattern, int a, int b) -> std::optional<VertexMap> {
  for (const Edge& e : pattern.edges()) {
    const int px[2] = {e.u, e.v};
    const int forward[2] = {a, b};
    if (auto found = pinned_search(host, pattern, px, forward)) return found;
    const int backward[2] = {b, a};
    if (auto found = pinned_search(host, pattern, px, backward)) return found;
  }
  return std::nullopt;
}

}  // namespace berge
