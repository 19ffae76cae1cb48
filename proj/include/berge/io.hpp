#pragma once

// Text format shared by hypergraphs and graphs:
//
//   n=<vertex count>
//   <v> <v> ...        one hyperedge per line, distinct ids in [0, n)
//   # comment
//
// Blank and '#' lines are ignored; repeated lines are repeated hyperedges.
// Graph files use the same layout with exactly two vertices per line.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

auto parse_hypergraph(std::string_view text) -> Hypergraph;
auto format_hypergraph(const Hypergraph& h) -> std::string;
auto load_hypergraph(const std::filesystem::path& path) -> Hypergraph;
void store_hypergraph(const Hypergraph& h, const std::filesystem::path& path);

auto parse_graph(std::string_view text) -> Graph;
auto format_graph(const Graph& g) -> std::string;
auto load_graph(const std::filesystem::path& path) -> Graph;
void store_graph(const Graph& g, const std::filesystem::path& path);

/// {"n": n, "edges": [[...], ...]}
auto to_json(const Hypergraph& h) -> nlohmann::json;
auto to_json(const Graph& g) -> nlohmann::json;
auto hypergraph_from_json(const nlohmann::json& j) -> Hypergraph;
auto graph_from_json(const nlohmann::json& j) -> Graph;

auto read_file(const std::filesystem::path& path) -> std::string;
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace berge
