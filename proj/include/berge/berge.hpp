#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/**
 * Certificate that a hypergraph contains a Berge copy of a pattern F: an
 * injective vertex map V(F) -> V(H) and, for every pattern edge, a distinct
 * hyperedge index containing both mapped endpoints.
 */
struct BergeWitness {
  std::vector<std::pair<int, int>> vertex_map;        // (pattern vertex, host vertex)
  std::vector<std::pair<Edge, int>> edge_assignment;  // (pattern edge, hyperedge index)

  friend auto operator==(const BergeWitness&, const BergeWitness&) -> bool = default;
};

enum class Detection { Found, Free, Truncated };

struct DetectResult {
  Detection status = Detection::Free;
  std::optional<BergeWitness> witness;
  std::uint64_t nodes = 0;
};

struct DetectOptions {
  /// Embedding-tree node budget; 0 means unlimited.
  std::uint64_t max_nodes = 0;
};

/// Full detection report; honours the node budget.
auto detect_berge(const Hypergraph& h, const Graph& pattern, const DetectOptions& options = {}) -> DetectResult;

/// A Berge-F witness, or nullopt when H is Berge-F-free.
auto contains_berge(const Hypergraph& h, const Graph& pattern) -> std::optional<BergeWitness>;

/// A Berge-F witness whose edge assignment uses hyperedge `index`. When H
/// minus that hyperedge is Berge-F-free this decides whether H is.
auto contains_berge_using(const Hypergraph& h, const Graph& pattern, std::size_t index)
    -> std::optional<BergeWitness>;

auto is_berge_f_free(const Hypergraph& h, const Graph& pattern) -> bool;

/// One witness for every copy of F in the shadow that admits a system of
/// distinct representatives.
auto all_berge_witnesses(const Hypergraph& h, const Graph& pattern) -> std::vector<BergeWitness>;

/// Independent re-check of the witness invariants.
auto check_witness(const Hypergraph& h, const Graph& pattern, const BergeWitness& w) -> bool;

auto to_json(const BergeWitness& w) -> nlohmann::json;
auto witness_from_json(const nlohmann::json& j) -> BergeWitness;

}  // namespace berge
