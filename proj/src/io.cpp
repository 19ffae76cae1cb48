#include "berge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "berge/error.hpp"

namespace berge {
namespace {

struct ParsedFile {
  int n = 0;
  std::vector<std::vector<int>> lines;
};

auto malformed(std::size_t line_no, const std::string& why) -> Error {
  return Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": " + why);
}

auto parse_lines(std::string_view text) -> ParsedFile {
  ParsedFile out;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line.remove_prefix(first);

    if (!have_header) {
      if (!line.starts_with("n=")) throw malformed(line_no, "expected header 'n=<integer>'");
      std::string_view digits = line.substr(2);
      while (!digits.empty() && (digits.back() == ' ' || digits.back() == '\t')) digits.remove_suffix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out.n);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || out.n < 0)
        throw malformed(line_no, "bad vertex count '" + std::string(digits) + "'");
      have_header = true;
      continue;
    }

    std::vector<int> vertices;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      int v = 0;
      auto [ptr, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (ptr < end && *ptr != ' ' && *ptr != '\t'))
        throw malformed(line_no, "expected space-separated vertex ids");
      if (v < 0 || v >= out.n)
        throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                                                     " outside 0.." + std::to_string(out.n - 1));
      for (int seen : vertices)
        if (seen == v)
          throw Error(ErrorCode::DuplicateVertexInEdge,
                      "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " repeated");
      vertices.push_back(v);
      p = ptr;
    }
    out.lines.push_back(std::move(vertices));
  }
  if (!have_header) throw malformed(line_no, "missing header 'n=<integer>'");
  return out;
}

}  // namespace

auto parse_hypergraph(std::string_view text) -> Hypergraph {
  auto parsed = parse_lines(text);
  return Hypergraph(parsed.n, std::move(parsed.lines));
}

auto format_hypergraph(const Hypergraph& h) -> std::string {
  std::ostringstream out;
  out << "n=" << h.vertex_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

auto parse_graph(std::string_view text) -> Graph {
  auto parsed = parse_lines(text);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parsed.lines.size(); ++i) {
    if (parsed.lines[i].size() != 2)
      throw Error(ErrorCode::MalformedLine,
                  "graph edge " + std::to_string(i + 1) + " must list exactly two vertices");
    edges.push_back(Edge::make(parsed.lines[i][0], parsed.lines[i][1]));
  }
  return Graph(parsed.n, std::move(edges));
}

auto format_graph(const Graph& g) -> std::string {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

auto read_file(const std::filesystem::path& path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

auto load_hypergraph(const std::filesystem::path& path) -> Hypergraph { return parse_hypergraph(read_file(path)); }

void store_hypergraph(const Hypergraph& h, const std::filesystem::path& path) {
  write_file(path, format_hypergraph(h));
}

auto load_graph(const std::filesystem::path& path) -> Graph { return parse_graph(read_file(path)); }

void store_graph(const Graph& g, const std::filesystem::path& path) { write_file(path, format_graph(g)); }

auto to_json(const Hypergraph& h) -> nlohmann::json {
  return {{"n", h.vertex_count()}, {"edges", h.edges()}};
}

auto to_json(const Graph& g) -> nlohmann::json {
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

auto hypergraph_from_json(const nlohmann::json& j) -> Hypergraph {
  try {
    return Hypergraph(j.at("n").get<int>(), j.at("edges").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLine, std::string("hypergraph JSON: ") + e.what());
  }
}

auto graph_from_json(const nlohmann::json& j) -> Graph {
  try {
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (pair.size() != 2) throw Error(ErrorCode::MalformedLine, "graph JSON edges must have two vertices");
      edges.push_back(Edge::make(pair[0].get<int>(), pair[1].get<int>()));
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLine, std::string("graph JSON: ") + e.what());
  }
}

}  // namespace berge
