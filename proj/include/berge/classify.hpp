#pragma once

// Blue/non-blue split of the shadow: a shadow edge is blue when at most
// |E(F)| - 1 hyperedges contain it. In a Berge-F-free hypergraph every copy of
// F in the shadow has a blue edge, and inside any hyperedge the non-blue pairs
// are F-free; the verifiers below check both facts exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/embed.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

enum class MultiplicitySemantics {
  Multiset,  // duplicate hyperedges each count
  Set,       // identical hyperedges count once
};

struct ClassifiedEdge {
  Edge edge;
  std::uint32_t multiplicity = 0;
  bool blue = false;
};

struct EdgeClassification {
  std::vector<ClassifiedEdge> edges;  // every shadow edge, sorted
  std::uint32_t blue_limit = 0;       // |E(F)| - 1
  int vertex_count = 0;

  auto blue_count() const -> std::size_t;
  auto non_blue_count() const -> std::size_t { return edges.size() - blue_count(); }
  auto blue_graph() const -> Graph;
  auto non_blue_graph() const -> Graph;
};

/// Throws when F has no edges.
auto classify_edges(const Hypergraph& h, const Graph& pattern,
                    MultiplicitySemantics semantics = MultiplicitySemantics::Multiset) -> EdgeClassification;

/// CSV with header `u,v,multiplicity,blue`.
auto classification_csv(const EdgeClassification& c) -> std::string;

enum class CheckStatus { Ok, Counterexample, Truncated };

struct CopyCheck {
  CheckStatus status = CheckStatus::Ok;
  std::optional<VertexMap> copy;  // the violating copy, pattern vertex -> host vertex
  std::uint64_t copies_examined = 0;
  std::uint64_t nodes = 0;
};

struct CheckOptions {
  /// Node budget for the copy search; 0 is unlimited. Hitting it yields Truncated.
  std::uint64_t max_nodes = 0;
  /// Enumerate every copy of F in the shadow and test each one, instead of
  /// searching the non-blue subgraph directly. Same answer, much slower.
  bool enumerate_shadow_copies = false;
  MultiplicitySemantics semantics = MultiplicitySemantics::Multiset;
};

/// Looks for a copy of F in the shadow with no blue edge.
auto verify_blue_in_every_copy(const Hypergraph& h, const Graph& pattern, const CheckOptions& options = {})
    -> CopyCheck;

/// Looks for a copy of F among the non-blue pairs inside hyperedge `index`.
/// Throws when the index is out of range or the hyperedge has fewer than
/// |V(F)| vertices.
auto verify_nonblue_within_edge_f_free(const Hypergraph& h, const Graph& pattern, std::size_t index,
                                       const CheckOptions& options = {}) -> CopyCheck;

struct DensityRow {
  std::size_t index = 0;
  int size = 0;
  std::int64_t blue_pairs = 0;
  std::int64_t pairs = 0;
  double ratio = 0.0;
};

struct DensityReport {
  std::vector<DensityRow> rows;
  double min_ratio = 1.0;
};

/// Blue pairs inside each hyperedge relative to C(|h|,2). Requires |h| >= 2.
auto blue_density_report(const Hypergraph& h, const Graph& pattern,
                         MultiplicitySemantics semantics = MultiplicitySemantics::Multiset) -> DensityReport;

struct CountingBound {
  std::int64_t blue_incidences = 0;  // sum over h of blue pairs in h
  std::int64_t blue_edges = 0;
  std::int64_t bound = 0;            // (|E(F)| - 1) * blue_edges
  auto holds() const -> bool { return blue_incidences <= bound; }
};

/// Each blue edge lies in at most |E(F)| - 1 hyperedges, so the per-hyperedge
/// blue counts sum to at most (|E(F)| - 1) times the number of blue edges.
auto blue_counting_bound(const Hypergraph& h, const Graph& pattern) -> CountingBound;

}  // namespace berge
