#include "berge/ramsey.hpp"

#include <algorithm>
#include <sstream>

#include "berge/error.hpp"
#include "berge/graph_enum.hpp"

namespace berge {

TwoColoring::TwoColoring(int n) : n_(n), colors_(static_cast<std::size_t>(binomial2(n)), 1) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "colouring vertex count must be non-negative");
}

auto TwoColoring::from_red_graph(const Graph& red) -> TwoColoring {
  TwoColoring c(red.vertex_count());
  for (int v = 1; v < c.n_; ++v)
    for (int u = 0; u < v; ++u) c.set_color(u, v, red.has_edge(u, v) ? 1 : 2);
  return c;
}

auto TwoColoring::index(int u, int v) const -> std::size_t {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorCode::VertexOutOfRange, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not a pair of K_" + std::to_string(n_));
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(binomial2(v) + u);
}

auto TwoColoring::color(int u, int v) const -> int { return colors_[index(u, v)]; }

void TwoColoring::set_color(int u, int v, int c) {
  if (c != 1 && c != 2) throw Error(ErrorCode::InvalidArgument, "colours are 1 and 2");
  colors_[index(u, v)] = static_cast<std::uint8_t>(c);
}

auto TwoColoring::color_graph(int c) const -> Graph {
  std::vector<Edge> edges;
  for (int v = 1; v < n_; ++v)
    for (int u = 0; u < v; ++u)
      if (color(u, v) == c) edges.push_back({u, v});
  return Graph(n_, std::move(edges));
}

auto TwoColoring::swapped() const -> TwoColoring {
  TwoColoring out = *this;
  for (auto& c : out.colors_) c = static_cast<std::uint8_t>(3 - c);
  return out;
}

auto mono_copy(const TwoColoring& c, const Graph& f, const Graph& g) -> MonoCopy {
  if (auto copy = find_copy(c.color_graph(1), f)) return {MonoKind::FirstColorF, std::move(*copy)};
  if (auto copy = find_copy(c.color_graph(2), g)) return {MonoKind::SecondColorG, std::move(*copy)};
  return {};
}

auto ramsey_number(const Graph& f, const Graph& g, const RamseyOptions& options) -> RamseyResult {
  if (f.vertex_count() < 1 || g.vertex_count() < 1)
    throw Error(ErrorCode::InvalidArgument, "Ramsey targets need at least one vertex");
  if (options.cap < 1 || options.cap > OrderlyGraphSearch::kMaxVertices)
    throw Error(ErrorCode::InvalidArgument, "Ramsey cap must lie in 1..64");

  OrderlyGraphSearch search({&f, &g, options.max_nodes});
  RamseyResult result;
  result.classes_per_level.push_back(search.classes().size());
  SmallGraph last_avoider = search.classes().front();
  for (int n = 1; n <= options.cap; ++n) {
    if (!search.advance())
      throw Error(ErrorCode::BudgetExhausted, "Ramsey search exhausted its node budget of " +
                                                  std::to_string(options.max_nodes) + " while extending to n=" +
                                                  std::to_string(n));
    if (search.classes().empty()) {
      result.value = n;
      result.nodes = search.nodes();
      result.witness = TwoColoring::from_red_graph(last_avoider.to_graph());
      return result;
    }
    result.classes_per_level.push_back(search.classes().size());
    last_avoider = search.classes().front();
  }
  throw ExceedsCapError(options.cap + 1, "R exceeds the cap of " + std::to_string(options.cap) +
                                             "; lower bound " + std::to_string(options.cap + 1));
}

auto edge_size_threshold(const Graph& f, Edge e, const RamseyOptions& options) -> RamseyResult {
  if (!f.has_edge(e.u, e.v))
    throw Error(ErrorCode::InvalidArgument,
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge of the pattern");
  return ramsey_number(f, f.without_edge(e), options);
}

auto format_coloring(const TwoColoring& c) -> std::string {
  std::ostringstream out;
  out << "n=" << c.vertex_count() << '\n';
  for (int u = 0; u < c.vertex_count(); ++u)
    for (int v = u + 1; v < c.vertex_count(); ++v) out << u << ' ' << v << ' ' << c.color(u, v) << '\n';
  return out.str();
}

auto parse_coloring(const std::string& text) -> TwoColoring {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || !header.starts_with("n="))
    throw Error(ErrorCode::MalformedLine, "colouring must start with n=<integer>");
  TwoColoring c(std::stoi(header.substr(2)));
  std::vector<char> seen(c.pair_count(), 0);
  int u = 0, v = 0, color = 0;
  std::size_t lines = 0;
  while (in >> u >> v >> color) {
    c.set_color(u, v, color);
    auto& mark = seen[static_cast<std::size_t>(binomial2(std::max(u, v)) + std::min(u, v))];
    if (mark) throw Error(ErrorCode::MalformedLine, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} listed twice");
    mark = 1;
    ++lines;
  }
  if (!in.eof()) throw Error(ErrorCode::MalformedLine, "colouring lines must be `u v color`");
  if (lines != c.pair_count())
    throw Error(ErrorCode::MalformedLine, "colouring lists " + std::to_string(lines) + " pairs, expected " +
                                              std::to_string(c.pair_count()));
  return c;
}

}  // namespace berge
