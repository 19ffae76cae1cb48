#include "berge/classify.hpp"

#include <algorithm>
#include <sstream>

#include "berge/error.hpp"
#include "berge/kernels.hpp"

namespace berge {
namespace {

void require_edges(const Graph& pattern) {
  if (pattern.edge_count() == 0)
    throw Error(ErrorCode::InvalidArgument, "blue-edge classification needs a pattern with at least one edge");
}

auto distinct_hypergraph(const Hypergraph& h) -> Hypergraph {
  auto edges = h.edges();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph(h.vertex_count(), std::move(edges));
}

// Row-major blue adjacency bits, one row of words per vertex.
struct BlueRows {
  int n = 0;
  int words = 0;
  std::vector<Word> bits;

  auto row(int v) const -> std::span<const Word> {
    return {bits.data() + static_cast<std::size_t>(v) * words, static_cast<std::size_t>(words)};
  }
};

auto blue_rows(const EdgeClassification& c) -> BlueRows {
  BlueRows rows{c.vertex_count, words_for(c.vertex_count), {}};
  rows.bits.assign(static_cast<std::size_t>(rows.n) * rows.words, 0);
  for (const auto& e : c.edges) {
    if (!e.blue) continue;
    set_bit({rows.bits.data() + static_cast<std::size_t>(e.edge.u) * rows.words, static_cast<std::size_t>(rows.words)}, e.edge.v);
    set_bit({rows.bits.data() + static_cast<std::size_t>(e.edge.v) * rows.words, static_cast<std::size_t>(rows.words)}, e.edge.u);
  }
  return rows;
}

auto blue_pairs_in(const BlueRows& rows, std::span<const int> hyperedge) -> std::int64_t {
  std::vector<Word> members(static_cast<std::size_t>(rows.words), 0);
  for (int v : hyperedge) set_bit(members, v);
  std::int64_t twice = 0;
  for (int v : hyperedge) twice += static_cast<std::int64_t>(kernels::and_popcount(rows.row(v), members));
  return twice / 2;
}

auto search_status(const std::optional<VertexMap>& copy, bool truncated) -> CheckStatus {
  if (copy) return CheckStatus::Counterexample;
  return truncated ? CheckStatus::Truncated : CheckStatus::Ok;
}

auto find_copy_budgeted(const Graph& host, const Graph& pattern, std::uint64_t max_nodes, CopyCheck& check)
    -> std::optional<VertexMap> {
  std::optional<VertexMap> found;
  const auto stats = for_each_copy(
      host, pattern,
      [&](std::span<const int> map) {
        found.emplace(map.begin(), map.end());
        return false;
      },
      {max_nodes});
  check.nodes += stats.nodes;
  check.copies_examined += stats.copies;
  check.status = search_status(found, stats.truncated);
  return found;
}

}  // namespace

auto EdgeClassification::blue_count() const -> std::size_t {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.blue; }));
}

auto EdgeClassification::blue_graph() const -> Graph {
  std::vector<Edge> out;
  for (const auto& e : edges)
    if (e.blue) out.push_back(e.edge);
  return Graph(vertex_count, std::move(out));
}

auto EdgeClassification::non_blue_graph() const -> Graph {
  std::vector<Edge> out;
  for (const auto& e : edges)
    if (!e.blue) out.push_back(e.edge);
  return Graph(vertex_count, std::move(out));
}

auto classify_edges(const Hypergraph& h, const Graph& pattern, MultiplicitySemantics semantics)
    -> EdgeClassification {
  require_edges(pattern);
  const Hypergraph counted = semantics == MultiplicitySemantics::Set ? distinct_hypergraph(h) : h;
  const auto counts = pair_multiplicities(counted);
  const auto n = static_cast<std::size_t>(h.vertex_count());
  EdgeClassification c;
  c.vertex_count = h.vertex_count();
  c.blue_limit = static_cast<std::uint32_t>(pattern.edge_count() - 1);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::uint32_t m = counts[u * n + v];
      if (m == 0) continue;
      c.edges.push_back({Edge{static_cast<int>(u), static_cast<int>(v)}, m, m <= c.blue_limit});
    }
  return c;
}

auto classification_csv(const EdgeClassification& c) -> std::string {
  std::ostringstream out;
  out << "u,v,multiplicity,blue\n";
  for (const auto& e : c.edges) out << e.edge.u << ',' << e.edge.v << ',' << e.multiplicity << ',' << (e.blue ? 1 : 0) << '\n';
  return out.str();
}

auto verify_blue_in_every_copy(const Hypergraph& h, const Graph& pattern, const CheckOptions& options) -> CopyCheck {
  const auto c = classify_edges(h, pattern, options.semantics);
  CopyCheck check;
  if (!options.enumerate_shadow_copies) {
    // A copy with no blue edge is exactly a copy inside the non-blue subgraph.
    check.copy = find_copy_budgeted(c.non_blue_graph(), pattern, options.max_nodes, check);
    return check;
  }

  const Graph host = shadow(h);
  const Graph non_blue = c.non_blue_graph();
  std::optional<VertexMap> found;
  const auto stats = for_each_copy(
      host, pattern,
      [&](std::span<const int> map) {
        for (const Edge& e : pattern.edges())
          if (!non_blue.has_edge(map[e.u], map[e.v])) return true;
        found.emplace(map.begin(), map.end());
        return false;
      },
      {options.max_nodes});
  check.nodes = stats.nodes;
  check.copies_examined = stats.copies;
  check.copy = found;
  check.status = search_status(found, stats.truncated);
  return check;
}

auto verify_nonblue_within_edge_f_free(const Hypergraph& h, const Graph& pattern, std::size_t index,
                                       const CheckOptions& options) -> CopyCheck {
  if (index >= h.edge_count())
    throw Error(ErrorCode::InvalidArgument, "hyperedge index " + std::to_string(index) + " out of range");
  const auto hyperedge = h.edge(index);
  if (static_cast<int>(hyperedge.size()) < pattern.vertex_count())
    throw Error(ErrorCode::PreconditionViolated,
                "hyperedge " + std::to_string(index) + " has " + std::to_string(hyperedge.size()) +
                    " vertices, fewer than |V(F)| = " + std::to_string(pattern.vertex_count()));
  const auto c = classify_edges(h, pattern, options.semantics);
  const Graph local = c.non_blue_graph().induced(hyperedge);
  CopyCheck check;
  if (auto found = find_copy_budgeted(local, pattern, options.max_nodes, check)) {
    for (int& v : *found) v = hyperedge[static_cast<std::size_t>(v)];
    check.copy = std::move(found);
  }
  return check;
}

auto blue_density_report(const Hypergraph& h, const Graph& pattern, MultiplicitySemantics semantics)
    -> DensityReport {
  const auto c = classify_edges(h, pattern, semantics);
  const auto rows = blue_rows(c);
  DensityReport report;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto hyperedge = h.edge(i);
    if (hyperedge.size() < 2)
      throw Error(ErrorCode::PreconditionViolated,
                  "blue density needs hyperedges of size >= 2; hyperedge " + std::to_string(i) + " has size 1");
    DensityRow row;
    row.index = i;
    row.size = static_cast<int>(hyperedge.size());
    row.blue_pairs = blue_pairs_in(rows, hyperedge);
    row.pairs = binomial2(row.size);
    row.ratio = static_cast<double>(row.blue_pairs) / static_cast<double>(row.pairs);
    report.min_ratio = std::min(report.min_ratio, row.ratio);
    report.rows.push_back(row);
  }
  return report;
}

auto blue_counting_bound(const Hypergraph& h, const Graph& pattern) -> CountingBound {
  const auto c = classify_edges(h, pattern);
  const auto rows = blue_rows(c);
  CountingBound bound;
  for (std::size_t i = 0; i < h.edge_count(); ++i) bound.blue_incidences += blue_pairs_in(rows, h.edge(i));
  bound.blue_edges = static_cast<std::int64_t>(c.blue_count());
  bound.bound = static_cast<std::int64_t>(c.blue_limit) * bound.blue_edges;
  return bound;
}

}  // namespace berge
