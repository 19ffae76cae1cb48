#include <doctest.h>

#include "berge/catalog.hpp"
#include "berge/embed.hpp"
#include "berge/error.hpp"
#include "berge/graph_enum.hpp"
#include "berge/ramsey.hpp"
#include "support/oracles.hpp"

using namespace berge;

namespace {

auto avoids(const TwoColoring& c, const Graph& f, const Graph& g) -> bool {
  return !oracle::contains_graph(c.color_graph(1), f) && !oracle::contains_graph(c.color_graph(2), g);
}

}  // namespace

TEST_CASE("monochromatic copies") {
  const auto k3 = catalog::complete(3), p3 = catalog::path(3);
  CHECK(mono_copy(TwoColoring(5), k3, k3).kind == MonoKind::FirstColorF);
  TwoColoring c(4);
  c.set_color(0, 1, 2);
  c.set_color(2, 3, 2);
  CHECK(mono_copy(c, k3, p3).kind == MonoKind::None);
  CHECK(mono_copy(TwoColoring(2), k3, p3).kind == MonoKind::None);
  CHECK(mono_copy(c.swapped(), p3, k3).kind == MonoKind::None);
  CHECK(mono_copy(c.swapped(), catalog::complete(2), k3).kind == MonoKind::FirstColorF);
}

TEST_CASE("coloring text round trip") {
  TwoColoring c(5);
  c.set_color(1, 3, 2);
  c.set_color(0, 4, 2);
  CHECK(parse_coloring(format_coloring(c)) == c);
  CHECK(TwoColoring::from_red_graph(c.color_graph(1)) == c);
  CHECK_THROWS_AS(parse_coloring("n=3\n0 1 1\n0 1 2\n1 2 1\n"), Error);
  CHECK_THROWS_AS(parse_coloring("n=3\n0 1 1\n"), Error);
}

TEST_CASE("small Ramsey numbers with witnesses") {
  const auto k3 = catalog::complete(3), p3 = catalog::path(3);
  struct Case {
    Graph f, g;
    int value;
  };
  for (const auto& [f, g, value] : {Case{p3, p3, 3}, Case{k3, p3, 5}, Case{k3, k3, 6}}) {
    const auto r = ramsey_number(f, g);
    CHECK(r.value == value);
    CHECK(r.witness.vertex_count() == value - 1);
    CHECK(avoids(r.witness, f, g));
    CHECK(oracle::every_coloring_forces(value, f, g));
    CHECK_FALSE(oracle::every_coloring_forces(value - 1, f, g));
  }
}

TEST_CASE("more Ramsey values against the exhaustive oracle") {
  const std::vector<Graph> targets{catalog::path(3), catalog::path(4), catalog::complete(3), catalog::cycle(4),
                                   Graph(3, {{0, 1}}), catalog::complete(2)};
  for (const auto& f : targets)
    for (const auto& g : targets) {
      const auto r = ramsey_number(f, g, {7, 100'000'000});
      CHECK(avoids(r.witness, f, g));
      if (r.value == 7) {
        // R(K3, C4) = R(K3, P4) = 7; the exhaustive oracle is too slow at n = 7.
        CHECK((f == catalog::complete(3) || g == catalog::complete(3)));
        CHECK_FALSE(oracle::every_coloring_forces(6, f, g));
        continue;
      }
      CHECK(avoids(r.witness, f, g));
      CHECK(oracle::every_coloring_forces(r.value, f, g));
      if (r.value >= 2) CHECK_FALSE(oracle::every_coloring_forces(r.value - 1, f, g));
    }
}

TEST_CASE("edge thresholds") {
  const auto k3 = catalog::complete(3);
  for (auto e : k3.edges()) CHECK(edge_size_threshold(k3, e).value == 5);
  const auto p3 = catalog::path(3);
  for (auto e : p3.edges()) CHECK(edge_size_threshold(p3, e).value == 3);
  CHECK(edge_size_threshold(catalog::complete(2), {0, 1}).value == 2);
}

TEST_CASE("cap and budget") {
  const auto k4 = catalog::complete(4);
  try {
    ramsey_number(k4, k4.without_edge({0, 1}), {6, 100'000'000});
    FAIL("expected ExceedsCap");
  } catch (const ExceedsCapError& e) {
    CHECK(e.lower_bound() == 7);
  }
  try {
    ramsey_number(catalog::complete(3), catalog::complete(3), {10, 5});
    FAIL("expected budget exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
  CHECK_THROWS_AS(ramsey_number(Graph(0), catalog::complete(3)), Error);
  CHECK_THROWS_AS(OrderlyGraphSearch({}), Error);
}

TEST_CASE("orderly generation counts graphs up to isomorphism") {
  const auto k7 = catalog::complete(7);
  OrderlyGraphSearch all({&k7, nullptr, 0});
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n < expected.size(); ++n) {
    REQUIRE(all.advance());
    CHECK(all.classes().size() == expected[n]);
  }
  const auto k3 = catalog::complete(3);
  OrderlyGraphSearch tri_free({&k3, nullptr, 0});
  const std::vector<std::size_t> tri{1, 1, 2, 3, 7, 14, 38};
  for (std::size_t n = 1; n < tri.size(); ++n) {
    REQUIRE(tri_free.advance());
    CHECK(tri_free.classes().size() == tri[n]);
  }
}
