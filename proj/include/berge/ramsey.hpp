#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/embed.hpp"
#include "berge/graph.hpp"

namespace berge {

/// Red/blue colouring of the pairs of K_n. Colour 1 is "red", colour 2 "blue".
class TwoColoring {
 public:
  TwoColoring() = default;
  /// Every pair starts with colour 1.
  explicit TwoColoring(int n);
  /// Colour 1 exactly on the edges of `red`.
  static auto from_red_graph(const Graph& red) -> TwoColoring;

  auto vertex_count() const -> int { return n_; }
  auto pair_count() const -> std::size_t { return colors_.size(); }
  auto color(int u, int v) const -> int;
  void set_color(int u, int v, int c);
  auto color_graph(int c) const -> Graph;
  /// Swaps the two colours.
  auto swapped() const -> TwoColoring;

  friend auto operator==(const TwoColoring&, const TwoColoring&) -> bool = default;

 private:
  auto index(int u, int v) const -> std::size_t;

  int n_ = 0;
  std::vector<std::uint8_t> colors_;  // colex pair order (0,1),(0,2),(1,2),(0,3),...
};

enum class MonoKind { None, FirstColorF, SecondColorG };

struct MonoCopy {
  MonoKind kind = MonoKind::None;
  VertexMap map;
};

/// A copy of F in colour 1 or of G in colour 2 (F is tried first).
auto mono_copy(const TwoColoring& c, const Graph& f, const Graph& g) -> MonoCopy;

struct RamseyOptions {
  int cap = 10;
  std::uint64_t max_nodes = 100'000'000;
};

struct RamseyResult {
  int value = 0;
  /// A colouring of K_{value-1} with neither a colour-1 F nor a colour-2 G.
  TwoColoring witness;
  std::uint64_t nodes = 0;
  /// Non-isomorphic avoiding colourings found on n = 0, 1, ..., value - 1 vertices.
  std::vector<std::size_t> classes_per_level;
};

/**
 * Exact R(F, G): the least n such that every colouring of K_n has a colour-1
 * F or a colour-2 G. Throws ExceedsCapError when R > cap and Error
 * (BudgetExhausted) when the node budget runs out. F and G need at least one
 * vertex; edgeless targets are allowed.
 */
auto ramsey_number(const Graph& f, const Graph& g, const RamseyOptions& options = {}) -> RamseyResult;

/// R(F, F \ e) with F \ e keeping every vertex of F.
auto edge_size_threshold(const Graph& f, Edge e, const RamseyOptions& options = {}) -> RamseyResult;

/// Text lines `u v color` for every pair, preceded by `n=<n>`.
auto format_coloring(const TwoColoring& c) -> std::string;
auto parse_coloring(const std::string& text) -> TwoColoring;

}  // namespace berge
