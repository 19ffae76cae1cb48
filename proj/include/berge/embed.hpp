#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "berge/bitset.hpp"
#include "berge/graph.hpp"

namespace berge {

/// Image of every pattern vertex, indexed by pattern vertex.
using VertexMap = std::vector<int>;

/// Read-only adjacency rows of a host graph; lets searches run on scratch
/// bit matrices without materialising a Graph.
struct HostView {
  int n = 0;
  int words = 0;
  const Word* rows = nullptr;

  static auto of(const Graph& g) -> HostView { return {g.vertex_count(), g.words_per_row(), g.rows().data()}; }
  auto row(int v) const -> std::span<const Word> {
    return {rows + static_cast<std::size_t>(v) * words, static_cast<std::size_t>(words)};
  }
};

/**
 * Order in which pattern vertices are mapped: any pinned vertices first, then
 * repeatedly the unplaced vertex with the most placed neighbours (ties: higher
 * degree, then lower id). Isolated vertices come last.
 */
class EmbeddingPlan {
 public:
  explicit EmbeddingPlan(const Graph& pattern, std::span<const int> pinned = {});

  auto size() const -> int { return static_cast<int>(order_.size()); }
  auto vertex_at(int pos) const -> int { return order_[pos]; }
  auto order() const -> std::span<const int> { return order_; }
  /// Pattern vertices placed before `pos` and adjacent to vertex_at(pos).
  auto back_neighbors(int pos) const -> std::span<const int> { return back_[pos]; }
  /// Indices into pattern.edges() whose second endpoint is placed at `pos`.
  auto completed_edges(int pos) const -> std::span<const int> { return completed_[pos]; }
  auto pattern_degree(int pattern_vertex) const -> int { return degree_[pattern_vertex]; }

 private:
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
  std::vector<std::vector<int>> completed_;
  std::vector<int> degree_;
};

/// All automorphisms of `pattern` (including the identity).
auto automorphisms(const Graph& pattern) -> std::vector<VertexMap>;

/// True when `map` is the lexicographically smallest of {map o s : s in auts};
/// exactly one map per copy passes.
auto is_canonical_copy(std::span<const int> map, const std::vector<VertexMap>& auts) -> bool;

struct CopyStats {
  std::uint64_t copies = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
  bool stopped = false;
};

struct CopyOptions {
  /// Search-tree node budget; 0 means unlimited.
  std::uint64_t max_nodes = 0;
};

/**
 * Streams one representative injective map per copy of `pattern` in `host`
 * (maps equal up to an automorphism of the pattern are the same copy).
 * Order is deterministic. The callback returns false to stop early.
 */
auto for_each_copy(const Graph& host, const Graph& pattern, const std::function<bool(std::span<const int>)>& visit,
                   const CopyOptions& options = {}) -> CopyStats;

auto find_embeddings(const Graph& host, const Graph& pattern) -> std::vector<VertexMap>;
auto count_copies(const Graph& host, const Graph& pattern) -> std::uint64_t;
auto find_copy(HostView host, const Graph& pattern) -> std::optional<VertexMap>;
auto find_copy(const Graph& host, const Graph& pattern) -> std::optional<VertexMap>;

/// A copy that uses host vertex v (as the image of any pattern vertex).
auto find_copy_through_vertex(HostView host, const Graph& pattern, int v) -> std::optional<VertexMap>;

/// A copy whose edge set contains host edge {a,b}. Requires {a,b} in host.
auto find_copy_through_edge(HostView host, const Graph& pattern, int a, int b) -> std::optional<VertexMap>;

}  // namespace berge
