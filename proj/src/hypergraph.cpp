#include "berge/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "berge/error.hpp"
#include "berge/kernels.hpp"

namespace berge {
namespace {

void normalize(int n, std::vector<int>& hyperedge) {
  if (hyperedge.empty()) throw Error(ErrorCode::EmptyHyperedge, "hyperedge must contain at least one vertex");
  std::sort(hyperedge.begin(), hyperedge.end());
  for (int v : hyperedge)
    if (v < 0 || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  if (auto dup = std::adjacent_find(hyperedge.begin(), hyperedge.end()); dup != hyperedge.end())
    throw Error(ErrorCode::DuplicateVertexInEdge, "vertex " + std::to_string(*dup) + " repeated in a hyperedge");
}

auto mask_of(std::span<const int> hyperedge) -> VertexMask {
  VertexMask m;
  for (int v : hyperedge) m.set(v);
  return m;
}

}  // namespace

Hypergraph::Hypergraph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "hypergraph vertex count must be non-negative");
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> hyperedges) : Hypergraph(n) {
  for (auto& e : hyperedges) normalize(n, e);
  edges_ = std::move(hyperedges);
  if (has_masks()) {
    masks_.reserve(edges_.size());
    for (const auto& e : edges_) masks_.push_back(mask_of(e));
  }
}

auto Hypergraph::contains(std::size_t i, int v) const -> bool {
  if (v < 0 || v >= n_) return false;
  if (has_masks()) return masks_[i].test(v);
  return std::binary_search(edges_[i].begin(), edges_[i].end(), v);
}

auto Hypergraph::contains_pair(std::size_t i, int u, int v) const -> bool { return contains(i, u) && contains(i, v); }

auto Hypergraph::covering(int u, int v) const -> std::vector<std::uint32_t> {
  std::vector<std::uint32_t> out;
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return out;
  if (has_masks()) {
    kernels::superset_indices(masks_, VertexMask::pair(u, v), out);
  } else {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (contains_pair(i, u, v)) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

auto Hypergraph::with_edge(std::vector<int> hyperedge) const -> Hypergraph {
  normalize(n_, hyperedge);
  Hypergraph next = *this;
  if (next.has_masks()) next.masks_.push_back(mask_of(hyperedge));
  next.edges_.push_back(std::move(hyperedge));
  return next;
}

auto Hypergraph::with_edge_replaced(std::size_t i, std::vector<int> hyperedge) const -> Hypergraph {
  if (i >= edges_.size()) throw Error(ErrorCode::InvalidArgument, "hyperedge index out of range");
  normalize(n_, hyperedge);
  Hypergraph next = *this;
  if (next.has_masks()) next.masks_[i] = mask_of(hyperedge);
  next.edges_[i] = std::move(hyperedge);
  return next;
}

auto shadow(const Hypergraph& h) -> Graph {
  const int n = h.vertex_count();
  const int words = words_for(n);
  std::vector<Word> rows(static_cast<std::size_t>(n) * words, 0);
  for (const auto& e : h.edges()) {
    for (int u : e) {
      std::span<Word> row{rows.data() + static_cast<std::size_t>(u) * words, static_cast<std::size_t>(words)};
      for (int v : e)
        if (v != u) set_bit(row, v);
    }
  }
  return Graph::from_adjacency(n, rows, words);
}

auto multiplicity(const Hypergraph& h, int u, int v) -> std::size_t {
  const int n = h.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw Error(ErrorCode::VertexOutOfRange, "pair {" + std::to_string(u) + "," + std::to_string(v) +
                                                 "} outside 0.." + std::to_string(n - 1));
  if (h.has_masks()) return kernels::count_supersets(h.masks(), VertexMask::pair(u, v));
  std::size_t count = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i) count += h.contains_pair(i, u, v) ? 1 : 0;
  return count;
}

auto degree(const Hypergraph& h, int v) -> std::size_t {
  if (v < 0 || v >= h.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "vertex out of range");
  std::size_t count = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i) count += h.contains(i, v) ? 1 : 0;
  return count;
}

auto pair_multiplicities(const Hypergraph& h) -> std::vector<std::uint32_t> {
  const auto n = static_cast<std::size_t>(h.vertex_count());
  std::vector<std::uint32_t> counts(n * n, 0);
  DynamicBitset scratch(static_cast<int>(n));
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::span<const Word> bits;
    if (h.has_masks()) {
      bits = h.masks()[i].words;
    } else {
      scratch = DynamicBitset(static_cast<int>(n));
      for (int v : h.edge(i)) scratch.set(v);
      bits = scratch.words();
    }
    for (int u : h.edge(i)) kernels::add_bits({counts.data() + static_cast<std::size_t>(u) * n, n}, bits);
  }
  return counts;
}

auto checked_add(std::int64_t a, std::int64_t b) -> std::int64_t {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "64-bit overflow in weight sum");
  return r;
}

auto checked_mul(std::int64_t a, std::int64_t b) -> std::int64_t {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "64-bit overflow in weight product");
  return r;
}

auto weigh(const Hypergraph& h, const WeightFunction& w, std::int64_t threshold) -> WeightReport {
  if (threshold < 0) throw Error(ErrorCode::InvalidArgument, "weight threshold must be non-negative");
  WeightReport report;
  report.threshold = threshold;
  for (const auto& e : h.edges()) {
    const std::int64_t value = w(static_cast<int>(e.size()));
    if (static_cast<std::int64_t>(e.size()) <= threshold)
      report.below_threshold = checked_add(report.below_threshold, value);
    else
      report.above_threshold = checked_add(report.above_threshold, value);
  }
  report.total = checked_add(report.below_threshold, report.above_threshold);
  return report;
}

auto power_sum(const Hypergraph& h, int p) -> std::int64_t {
  std::int64_t total = 0;
  for (const auto& e : h.edges()) {
    std::int64_t term = 1;
    for (int i = 0; i < p; ++i) term = checked_mul(term, static_cast<std::int64_t>(e.size()));
    total = checked_add(total, term);
  }
  return total;
}

}  // namespace berge
