#include "berge/catalog.hpp"

#include <charconv>
#include <optional>

#include "berge/error.hpp"
#include "berge/io.hpp"

namespace berge::catalog {
namespace {

struct Name {
  char family = 0;
  int size = 0;
};

auto split(std::string_view spec) -> std::optional<Name> {
  if (spec.size() < 2) return std::nullopt;
  const char family = spec[0];
  if (family != 'K' && family != 'C' && family != 'P' && family != 'E') return std::nullopt;
  std::string_view digits = spec.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  int size = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  return Name{family, size};
}

}  // namespace

auto complete(int r) -> Graph {
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) edges.push_back({u, v});
  return Graph(r, std::move(edges));
}

auto cycle(int k) -> Graph {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) edges.push_back(Edge::make(v, (v + 1) % k));
  return Graph(k, std::move(edges));
}

auto path(int k) -> Graph {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "a path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < k; ++v) edges.push_back({v, v + 1});
  return Graph(k, std::move(edges));
}

auto empty(int k) -> Graph { return Graph(k); }

auto is_catalog_name(std::string_view spec) -> bool { return split(spec).has_value(); }

auto pattern(std::string_view spec) -> Graph {
  if (auto name = split(spec)) {
    if (name->size < 1) throw Error(ErrorCode::InvalidArgument, "pattern size must be positive");
    switch (name->family) {
      case 'K': return complete(name->size);
      case 'C': return cycle(name->size);
      case 'P': return path(name->size);
      default: return empty(name->size);
    }
  }
  return load_graph(std::string(spec));
}

}  // namespace berge::catalog
