#pragma once

#include <string>
#include <string_view>

#include "berge/graph.hpp"

namespace berge::catalog {

auto complete(int r) -> Graph;
/// Cycle on k >= 3 vertices.
auto cycle(int k) -> Graph;
/// Path on k vertices (k - 1 edges).
auto path(int k) -> Graph;
auto empty(int k) -> Graph;

/// Parses "K3", "K_3", "C4", "P_4", "E2" (edgeless); anything else is
/// treated as a graph file path.
auto pattern(std::string_view spec) -> Graph;

/// True when `spec` names a catalog graph rather than a file.
auto is_catalog_name(std::string_view spec) -> bool;

}  // namespace berge::catalog
