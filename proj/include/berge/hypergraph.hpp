#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "berge/bitset.hpp"
#include "berge/graph.hpp"
#include "berge/weight.hpp"

namespace berge {

/**
 * Multi-hypergraph on vertices 0..n-1. Hyperedges are sorted vertex lists
 * addressed by a stable index; duplicates are allowed and keep distinct
 * indices. For n <= 128 every hyperedge also carries a VertexMask so that
 * containment queries run through the bitset kernels; larger hypergraphs fall
 * back to binary search on the sorted lists.
 */
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n);
  /// Sorts each hyperedge. Throws on empty hyperedges, repeated vertices or
  /// vertices outside 0..n-1.
  Hypergraph(int n, std::vector<std::vector<int>> hyperedges);

  auto vertex_count() const -> int { return n_; }
  auto edge_count() const -> std::size_t { return edges_.size(); }
  auto edge(std::size_t i) const -> std::span<const int> { return edges_[i]; }
  auto edges() const -> const std::vector<std::vector<int>>& { return edges_; }
  auto edge_size(std::size_t i) const -> int { return static_cast<int>(edges_[i].size()); }

  auto has_masks() const -> bool { return n_ <= VertexMask::kCapacity; }
  auto masks() const -> std::span<const VertexMask> { return masks_; }

  auto contains(std::size_t i, int v) const -> bool;
  auto contains_pair(std::size_t i, int u, int v) const -> bool;

  /// Indices of hyperedges containing both u and v, ascending.
  auto covering(int u, int v) const -> std::vector<std::uint32_t>;

  auto with_edge(std::vector<int> hyperedge) const -> Hypergraph;
  auto with_edge_replaced(std::size_t i, std::vector<int> hyperedge) const -> Hypergraph;

  friend auto operator==(const Hypergraph& a, const Hypergraph& b) -> bool {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<VertexMask> masks_;
};

struct WeightReport {
  std::int64_t total = 0;
  std::int64_t below_threshold = 0;
  std::int64_t above_threshold = 0;
  std::int64_t threshold = 0;
};

/// 2-shadow: {u,v} is an edge iff some hyperedge contains both.
auto shadow(const Hypergraph& h) -> Graph;

/// Number of hyperedges (with multiplicity) containing u and v.
auto multiplicity(const Hypergraph& h, int u, int v) -> std::size_t;

/// Number of hyperedges (with multiplicity) containing v.
auto degree(const Hypergraph& h, int v) -> std::size_t;

/// Multiplicity of every vertex pair, row-major n x n (diagonal = degree).
auto pair_multiplicities(const Hypergraph& h) -> std::vector<std::uint32_t>;

/// Sum of w(|h|), split into |h| <= threshold and |h| > threshold.
auto weigh(const Hypergraph& h, const WeightFunction& w, std::int64_t threshold) -> WeightReport;

/// Sum of |h|^p with overflow detection.
auto power_sum(const Hypergraph& h, int p) -> std::int64_t;

auto checked_add(std::int64_t a, std::int64_t b) -> std::int64_t;
auto checked_mul(std::int64_t a, std::int64_t b) -> std::int64_t;

}  // namespace berge
