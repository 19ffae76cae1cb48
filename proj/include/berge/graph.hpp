#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "berge/bitset.hpp"

namespace berge {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static constexpr auto make(int a, int b) -> Edge { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on vertices 0..n-1. Immutable; edges are kept in
 * sorted order and mirrored in a row-major adjacency bit matrix so that
 * neighbourhood intersections are word operations.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws Error on self-loops, duplicate edges or endpoints >= n.
  Graph(int n, std::vector<Edge> edges);

  static auto from_adjacency(int n, std::span<const Word> rows, int words_per_row) -> Graph;

  auto vertex_count() const -> int { return n_; }
  auto edge_count() const -> std::size_t { return edges_.size(); }
  auto edges() const -> std::span<const Edge> { return edges_; }
  auto words_per_row() const -> int { return words_; }

  auto has_edge(int u, int v) const -> bool;
  auto row(int v) const -> std::span<const Word> {
    return {adjacency_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  auto rows() const -> std::span<const Word> { return adjacency_; }
  auto degree(int v) const -> int { return popcount(row(v)); }
  auto isolated_vertex_count() const -> int;

  /// Same vertex set, one edge removed. Throws if the edge is absent.
  auto without_edge(Edge e) const -> Graph;
  auto complement() const -> Graph;
  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  auto induced(std::span<const int> vertices) const -> Graph;

  friend auto operator==(const Graph& a, const Graph& b) -> bool { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<Word> adjacency_;
};

/// Exact clique number; throws when the graph has more than `cap` vertices.
auto clique_number(const Graph& g, int cap = 16) -> int;

/// Exact chromatic number; throws when the graph has more than `cap` vertices.
auto chromatic_number(const Graph& g, int cap = 16) -> int;

auto binomial2(long long m) -> long long;

}  // namespace berge
