#pragma once

// Orderly generation of small graphs up to isomorphism. Level n holds one
// representative per isomorphism class of graphs on n vertices that avoid a
// pattern F (as a subgraph) and, optionally, a pattern G in the complement.
// Both properties are closed under vertex deletion, so level n+1 is obtained
// by extending every class of level n with a new vertex and rejecting
// isomorphic duplicates. With G set, a graph is a red/blue colouring of K_n
// (red = edges), which is how Ramsey numbers are computed.

#include <cstdint>
#include <map>
#include <vector>

#include "berge/bitset.hpp"
#include "berge/graph.hpp"

namespace berge {

/// Graph on at most 64 vertices, one adjacency word per vertex.
struct SmallGraph {
  int n = 0;
  std::vector<Word> rows;

  auto edge_count() const -> int;
  auto has_edge(int u, int v) const -> bool { return (rows[u] >> v) & 1U; }
  auto to_graph() const -> Graph;

  friend auto operator==(const SmallGraph&, const SmallGraph&) -> bool = default;
};

struct OrderlyOptions {
  const Graph* avoid = nullptr;             // forbidden in the graph itself
  const Graph* avoid_complement = nullptr;  // forbidden in the complement
  std::uint64_t max_nodes = 0;              // 0 = unlimited
};

class OrderlyGraphSearch {
 public:
  static constexpr int kMaxVertices = 64;

  explicit OrderlyGraphSearch(OrderlyOptions options);

  /// Builds the next level. Returns false (leaving the level unchanged) when
  /// the node budget runs out.
  auto advance() -> bool;

  auto vertex_count() const -> int { return n_; }
  auto classes() const -> const std::vector<SmallGraph>& { return classes_; }
  auto nodes() const -> std::uint64_t { return nodes_; }

  /// True when g and h are isomorphic (exact backtracking test).
  static auto isomorphic(const SmallGraph& g, const SmallGraph& h) -> bool;

 private:
  void extend(const SmallGraph& parent);
  auto extend_from(int u) -> bool;
  auto admit(const SmallGraph& g) -> void;

  OrderlyOptions options_;
  int n_ = 0;
  std::vector<SmallGraph> classes_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;

  // Scratch for the extension in progress.
  std::vector<Word> red_;
  std::vector<Word> blue_;
  int new_vertex_ = 0;
  std::vector<SmallGraph> next_;
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets_;
};

}  // namespace berge
