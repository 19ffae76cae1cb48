#include "berge/graph.hpp"

#include <algorithm>
#include <string>

#include "berge/error.hpp"

namespace berge {

Graph::Graph(int n) : n_(n), words_(words_for(n)), adjacency_(static_cast<std::size_t>(n) * words_for(n), 0) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "graph vertex count must be non-negative");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside 0.." + std::to_string(n - 1));
    e = Edge::make(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw Error(ErrorCode::InvalidArgument,
                "duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    set_bit({adjacency_.data() + static_cast<std::size_t>(e.u) * words_, static_cast<std::size_t>(words_)}, e.v);
    set_bit({adjacency_.data() + static_cast<std::size_t>(e.v) * words_, static_cast<std::size_t>(words_)}, e.u);
  }
}

auto Graph::from_adjacency(int n, std::span<const Word> rows, int words_per_row) -> Graph {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    auto r = rows.subspan(static_cast<std::size_t>(u) * words_per_row, static_cast<std::size_t>(words_per_row));
    for_each_bit(r, [&](int v) {
      if (v > u && v < n) edges.push_back({u, v});
    });
  }
  return Graph(n, std::move(edges));
}

auto Graph::has_edge(int u, int v) const -> bool {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return test_bit(row(u), v);
}

auto Graph::isolated_vertex_count() const -> int {
  int isolated = 0;
  for (int v = 0; v < n_; ++v) isolated += degree(v) == 0 ? 1 : 0;
  return isolated;
}

auto Graph::without_edge(Edge e) const -> Graph {
  e = Edge::make(e.u, e.v);
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& f : edges_)
    if (f != e) kept.push_back(f);
  if (kept.size() == edges_.size())
    throw Error(ErrorCode::InvalidArgument,
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
  return Graph(n_, std::move(kept));
}

auto Graph::complement() const -> Graph {
  std::vector<Edge> edges;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) edges.push_back({u, v});
  return Graph(n_, std::move(edges));
}

auto Graph::induced(std::span<const int> vertices) const -> Graph {
  std::vector<Edge> edges;
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(vertices[i], vertices[j])) edges.push_back({i, j});
  return Graph(k, std::move(edges));
}

auto binomial2(long long m) -> long long { return m < 2 ? 0 : m * (m - 1) / 2; }

namespace {

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap)
    throw Error(ErrorCode::ExceedsCap, std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                                           " vertices, exact computation capped at " + std::to_string(cap));
}

// Branch and bound over candidate sets, smallest-index-first; n is small.
void grow_clique(const Graph& g, std::vector<Word>& candidates, int size, int& best) {
  const int remaining = popcount(candidates);
  if (size + remaining <= best) return;
  if (remaining == 0) {
    best = size;
    return;
  }
  std::vector<Word> rest = candidates;
  while (popcount(rest) > 0 && size + popcount(rest) > best) {
    int v = -1;
    for_each_bit(rest, [&](int b) {
      if (v < 0) v = b;
    });
    clear_bit(rest, v);
    std::vector<Word> next(rest.size());
    auto r = g.row(v);
    for (std::size_t w = 0; w < next.size(); ++w) next[w] = rest[w] & r[w];
    grow_clique(g, next, size + 1, best);
  }
}

auto colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, std::size_t pos, int k) -> bool {
  if (pos == order.size()) return true;
  const int v = order[pos];
  int used_max = -1;
  for (std::size_t i = 0; i < pos; ++i) used_max = std::max(used_max, color[order[i]]);
  // Symmetry: a fresh colour only ever needs to be the next unused one.
  const int limit = std::min(k - 1, used_max + 1);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < pos && ok; ++i)
      if (color[order[i]] == c && g.has_edge(v, order[i])) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, order, color, pos + 1, k)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

auto clique_number(const Graph& g, int cap) -> int {
  require_cap(g, cap, "clique_number");
  if (g.vertex_count() == 0) return 0;
  std::vector<Word> all(static_cast<std::size_t>(g.words_per_row()), 0);
  for (int v = 0; v < g.vertex_count(); ++v) set_bit(all, v);
  int best = 0;
  grow_clique(g, all, 0, best);
  return best;
}

auto chromatic_number(const Graph& g, int cap) -> int {
  require_cap(g, cap, "chromatic_number");
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = std::max(2, clique_number(g, cap)); k <= n; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    if (colorable(g, order, color, 0, k)) return k;
  }
  return n;
}

}  // namespace berge
