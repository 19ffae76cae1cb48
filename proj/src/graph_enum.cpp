#include "berge/graph_enum.hpp"

#include <algorithm>
#include <bit>

#include "berge/embed.hpp"
#include "berge/error.hpp"

namespace berge {
namespace {

auto vertex_invariants(const SmallGraph& g) -> std::vector<std::uint64_t> {
  std::vector<std::uint64_t> inv(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    const Word row = g.rows[v];
    std::uint64_t neighbour_degrees = 0;
    std::uint64_t triangles = 0;
    for (Word bits = row; bits != 0; bits &= bits - 1) {
      const int u = std::countr_zero(bits);
      neighbour_degrees += static_cast<std::uint64_t>(std::popcount(g.rows[u]));
      triangles += static_cast<std::uint64_t>(std::popcount(g.rows[u] & row));
    }
    inv[v] = (static_cast<std::uint64_t>(std::popcount(row)) << 48) | (neighbour_degrees << 20) | triangles;
  }
  return inv;
}

auto graph_key(const SmallGraph& g, const std::vector<std::uint64_t>& inv) -> std::vector<std::uint64_t> {
  std::vector<std::uint64_t> key = inv;
  std::sort(key.begin(), key.end());
  key.push_back(static_cast<std::uint64_t>(g.edge_count()));
  return key;
}

auto match(const SmallGraph& g, const SmallGraph& h, const std::vector<std::uint64_t>& ig,
           const std::vector<std::uint64_t>& ih, std::vector<int>& map, Word used, int v) -> bool {
  if (v == g.n) return true;
  for (int w = 0; w < h.n; ++w) {
    if ((used >> w) & 1U || ig[v] != ih[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(map[u], w);
    if (!ok) continue;
    map[v] = w;
    if (match(g, h, ig, ih, map, used | (Word{1} << w), v + 1)) return true;
  }
  return false;
}

}  // namespace

auto SmallGraph::edge_count() const -> int {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += std::popcount(rows[v]);
  return twice / 2;
}

auto SmallGraph::to_graph() const -> Graph { return Graph::from_adjacency(n, rows, 1); }

OrderlyGraphSearch::OrderlyGraphSearch(OrderlyOptions options) : options_(options) {
  if (options_.avoid == nullptr && options_.avoid_complement == nullptr)
    throw Error(ErrorCode::InvalidArgument, "orderly search needs at least one forbidden pattern");
  classes_.push_back(SmallGraph{0, {}});
}

auto OrderlyGraphSearch::isomorphic(const SmallGraph& g, const SmallGraph& h) -> bool {
  if (g.n != h.n) return false;
  const auto ig = vertex_invariants(g);
  const auto ih = vertex_invariants(h);
  std::vector<int> map(static_cast<std::size_t>(g.n), -1);
  return match(g, h, ig, ih, map, 0, 0);
}

auto OrderlyGraphSearch::advance() -> bool {
  if (n_ >= kMaxVertices) throw Error(ErrorCode::ExceedsCap, "orderly search is limited to 64 vertices");
  next_.clear();
  buckets_.clear();
  exhausted_ = false;
  for (const auto& parent : classes_) {
    extend(parent);
    if (exhausted_) {
      next_.clear();
      buckets_.clear();
      return false;
    }
  }
  classes_ = std::move(next_);
  next_ = {};
  buckets_.clear();
  ++n_;
  return true;
}

void OrderlyGraphSearch::extend(const SmallGraph& parent) {
  new_vertex_ = parent.n;
  const int n = parent.n + 1;
  red_.assign(kMaxVertices, 0);
  blue_.assign(kMaxVertices, 0);
  for (int v = 0; v < parent.n; ++v) {
    red_[v] = parent.rows[v];
    blue_[v] = ~parent.rows[v] & ((Word{1} << parent.n) - 1) & ~(Word{1} << v);
  }
  // Copies that use the new vertex only as an isolated pattern vertex.
  const HostView red{n, 1, red_.data()};
  const HostView blue{n, 1, blue_.data()};
  if (options_.avoid != nullptr && find_copy_through_vertex(red, *options_.avoid, new_vertex_)) return;
  if (options_.avoid_complement != nullptr &&
      find_copy_through_vertex(blue, *options_.avoid_complement, new_vertex_))
    return;
  extend_from(0);
}

auto OrderlyGraphSearch::extend_from(int u) -> bool {
  const int v = new_vertex_;
  if (options_.max_nodes != 0 && nodes_ >= options_.max_nodes) {
    exhausted_ = true;
    return false;
  }
  ++nodes_;
  if (u == v) {
    SmallGraph g{v + 1, std::vector<Word>(red_.begin(), red_.begin() + v + 1)};
    admit(g);
    return true;
  }
  const HostView red{v + 1, 1, red_.data()};
  const HostView blue{v + 1, 1, blue_.data()};

  red_[v] |= Word{1} << u;
  red_[u] |= Word{1} << v;
  const bool red_ok = options_.avoid == nullptr || !find_copy_through_edge(red, *options_.avoid, v, u);
  if (red_ok && !extend_from(u + 1)) return false;
  red_[v] &= ~(Word{1} << u);
  red_[u] &= ~(Word{1} << v);

  if (options_.avoid_complement != nullptr) {
    blue_[v] |= Word{1} << u;
    blue_[u] |= Word{1} << v;
    const bool blue_ok = !find_copy_through_edge(blue, *options_.avoid_complement, v, u);
    bool go_on = true;
    if (blue_ok) go_on = extend_from(u + 1);
    blue_[v] &= ~(Word{1} << u);
    blue_[u] &= ~(Word{1} << v);
    return go_on;
  }
  return extend_from(u + 1);
}

void OrderlyGraphSearch::admit(const SmallGraph& g) {
  const auto inv = vertex_invariants(g);
  auto& bucket = buckets_[graph_key(g, inv)];
  for (std::size_t idx : bucket)
    if (isomorphic(g, next_[idx])) return;
  bucket.push_back(next_.size());
  next_.push_back(g);
}

}  // namespace berge
