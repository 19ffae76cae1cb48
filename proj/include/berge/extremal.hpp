#pragma once

// Exact small-n oracles: the largest weight of a Berge-F-free hypergraph and
// the Turan number ex(n, F).

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/weight.hpp"

namespace berge {

struct SearchReport {
  /// Exact optimum when `exhaustive`, otherwise the best value found (a lower bound).
  std::int64_t optimum = 0;
  std::variant<Hypergraph, Graph> witness;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = true;
  double wall_seconds = 0.0;
};

auto to_json(const SearchReport& report) -> nlohmann::json;

struct HyperSearchOptions {
  int s_min = 2;
  int s_max = 2;
  /// Node budget; 0 = unlimited.
  std::uint64_t max_nodes = 100'000'000;
  /// Simple hypergraphs only (each candidate at most once).
  bool set_semantics = false;
  /// Copies allowed per distinct hyperedge in multiset mode; defaults to
  /// |E(F)| - 1, which is exact when s_min >= |V(F)|.
  std::optional<int> multiplicity_cap;
  /// Reject partial solutions that are not lexicographically maximal under
  /// permutations of the vertices decided so far (used for n <= 8).
  bool isomorph_rejection = true;
  int max_vertices = 12;
};

/**
 * Maximum of sum w(|h|) over Berge-F-free multisets of hyperedges with sizes in
 * [s_min, s_max]. Candidates are processed in colex order; each gets a
 * multiplicity from the cap down to 0, with a suffix-sum bound. The witness is
 * the first optimal solution in that order.
 */
auto max_weight_berge_free(int n, const Graph& pattern, const WeightFunction& w, const HyperSearchOptions& options)
    -> SearchReport;

struct GraphSearchOptions {
  std::uint64_t max_nodes = 100'000'000;
  int max_vertices = 10;
};

/// ex(n, F) with an extremal witness. F must have at least one edge.
auto max_f_free_edges(int n, const Graph& pattern, const GraphSearchOptions& options = {}) -> SearchReport;

struct MarginRow {
  int n = 0;
  std::int64_t ex = 0;
  std::int64_t pairs = 0;  // C(n,2)
  double ratio = 0.0;      // ex / C(n,2)
  bool exhaustive = true;
  auto holds() const -> bool { return ex <= pairs - 1; }
};

/// ex(n, F) against C(n,2) - 1 for every n in [n_min, n_max]; n_min >= |V(F)|.
auto verify_extremal_margin(const Graph& pattern, int n_min, int n_max, const GraphSearchOptions& options = {})
    -> std::vector<MarginRow>;

}  // namespace berge
