#pragma once

#include <cstdint>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/**
 * Vertex set split into n/r singletons and n/r blocks of size r-1; the
 * hyperedges are all singleton + block unions. r-uniform, (n/r)^2 hyperedges,
 * total size n^2/r, Berge-K_r-free. Singletons are 0..n/r-1; block j occupies
 * the next r-1 ids after block j-1. Requires r >= 2 and r | n.
 */
auto kr_construction(int n, int r) -> Hypergraph;

/// One hyperedge containing every vertex. Requires n >= 1.
auto single_edge(int n) -> Hypergraph;

struct GreedyOptions {
  int s_min = 2;
  int s_max = 2;
  std::uint64_t seed = 1;
  /// Random candidate draws = draws_per_n2 * n^2, unless every candidate
  /// fits in that budget, in which case all candidates are shuffled instead.
  int draws_per_n2 = 10;
};

struct GreedyResult {
  Hypergraph hypergraph;
  std::uint64_t candidates = 0;  // candidates examined
  std::uint64_t rejected = 0;    // would have created a Berge-F
  bool enumerated_all = false;   // candidate stream was the full shuffled family
};

/**
 * Adds candidate hyperedges (sizes in [s_min, s_max], seed-determined order)
 * whenever the result stays Berge-F-free. Candidates already present are
 * skipped, so the output is a simple hypergraph that is maximal with respect
 * to the stream. Identical inputs give identical output.
 */
auto greedy_maximal(int n, const Graph& pattern, const GreedyOptions& options) -> GreedyResult;

/// Deterministic 64-bit generator used by every randomised component
/// (splitmix64; output identical across platforms and standard libraries).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  auto next() -> std::uint64_t;
  /// Uniform integer in [0, bound), bound > 0.
  auto below(std::uint64_t bound) -> std::uint64_t;

 private:
  std::uint64_t state_;
};

}  // namespace berge
