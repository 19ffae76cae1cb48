#include <doctest.h>

#include "berge/berge.hpp"
#include "berge/catalog.hpp"
#include "berge/constructions.hpp"
#include "berge/embed.hpp"
#include "berge/error.hpp"
#include "berge/extremal.hpp"
#include "support/oracles.hpp"

using namespace berge;

namespace {

auto is_bipartite(const Graph& g) -> bool { return g.edge_count() == 0 || chromatic_number(g) <= 2; }

auto hyper_witness(const SearchReport& r) -> const Hypergraph& { return std::get<Hypergraph>(r.witness); }

}  // namespace

TEST_CASE("ex(n, F)") {
  const auto k3 = catalog::complete(3);
  const auto five = max_f_free_edges(5, k3);
  CHECK(five.optimum == 6);
  CHECK(five.exhaustive);
  CHECK(is_bipartite(std::get<Graph>(five.witness)));
  const auto six = max_f_free_edges(6, k3);
  CHECK(six.optimum == 9);
  CHECK(is_bipartite(std::get<Graph>(six.witness)));
  CHECK(max_f_free_edges(2, k3).optimum == 1);
  CHECK(max_f_free_edges(3, catalog::complete(4)).optimum == 3);
  for (const auto& f : {k3, catalog::cycle(4), catalog::path(4), catalog::path(3)})
    for (int n = 1; n <= 6; ++n) {
      const auto r = max_f_free_edges(n, f);
      CHECK(r.optimum == oracle::ex(n, f));
      const auto& g = std::get<Graph>(r.witness);
      CHECK(static_cast<std::int64_t>(g.edge_count()) == r.optimum);
      CHECK_FALSE(oracle::contains_graph(g, f));
    }
}

TEST_CASE("margin table") {
  for (const auto& f : {catalog::complete(3), catalog::cycle(4)}) {
    const auto rows = verify_extremal_margin(f, f.vertex_count(), 7);
    CHECK(rows.size() == static_cast<std::size_t>(8 - f.vertex_count()));
    for (const auto& row : rows) {
      CHECK(row.holds());
      CHECK(row.ratio < 1.0);
    }
  }
  CHECK_THROWS_AS(verify_extremal_margin(catalog::complete(3), 2, 5), Error);
}

TEST_CASE("max weight examples") {
  const auto k3 = catalog::complete(3);
  HyperSearchOptions o;
  o.s_min = 3;
  o.s_max = 3;
  const auto r = max_weight_berge_free(3, k3, WeightFunction::size(), o);
  CHECK(r.optimum == 6);
  CHECK(hyper_witness(r).edge_count() == 2);
  o.set_semantics = true;
  CHECK(max_weight_berge_free(3, k3, WeightFunction::size(), o).optimum == 3);

  HyperSearchOptions k2;
  k2.s_min = 2;
  k2.s_max = 4;
  CHECK(max_weight_berge_free(4, catalog::complete(2), WeightFunction::size(), k2).optimum == 0);
  CHECK_THROWS_AS(max_weight_berge_free(4, catalog::empty(2), WeightFunction::size(), k2), Error);
}

TEST_CASE("max weight agrees with full enumeration") {
  struct Case {
    int n, lo, hi;
    Graph f;
  };
  const std::vector<Case> cases{{4, 2, 3, catalog::complete(3)}, {4, 3, 4, catalog::complete(3)},
                                {4, 2, 2, catalog::path(3)},     {5, 4, 5, catalog::cycle(4)},
                                {4, 3, 4, catalog::path(4)}};
  for (const auto& [n, lo, hi, f] : cases) {
    for (bool set : {true, false}) {
      const int cap = set ? 1 : static_cast<int>(f.edge_count()) - 1;
      HyperSearchOptions o;
      o.s_min = lo;
      o.s_max = hi;
      o.set_semantics = set;
      for (bool iso : {true, false}) {
        o.isomorph_rejection = iso;
        const auto r = max_weight_berge_free(n, f, WeightFunction::size_squared(), o);
        CHECK(r.exhaustive);
        CHECK(r.optimum == oracle::max_weight(n, f, lo, hi, cap, [](int m) { return std::int64_t{m} * m; }));
        CHECK(is_berge_f_free(hyper_witness(r), f));
        CHECK(weigh(hyper_witness(r), WeightFunction::size_squared(), 0).total == r.optimum);
      }
    }
  }
}

TEST_CASE("multiplicity cap is exact for sizes at least |V(F)|") {
  const auto k3 = catalog::complete(3);
  for (int n = 3; n <= 4; ++n) {
    HyperSearchOptions capped;
    capped.s_min = 3;
    capped.s_max = n;
    HyperSearchOptions loose = capped;
    loose.multiplicity_cap = 4;
    CHECK(max_weight_berge_free(n, k3, WeightFunction::size(), capped).optimum ==
          max_weight_berge_free(n, k3, WeightFunction::size(), loose).optimum);
  }
}

TEST_CASE("construction value is a lower bound") {
  const auto k3 = catalog::complete(3);
  HyperSearchOptions o;
  o.s_min = 3;
  o.s_max = 3;
  o.set_semantics = true;
  const auto r = max_weight_berge_free(6, k3, WeightFunction::size(), o);
  CHECK(r.exhaustive);
  CHECK(r.optimum >= power_sum(kr_construction(6, 3), 1));
}

TEST_CASE("budget returns a lower bound") {
  HyperSearchOptions o;
  o.s_min = 2;
  o.s_max = 4;
  o.max_nodes = 50;
  const auto r = max_weight_berge_free(6, catalog::cycle(4), WeightFunction::size(), o);
  CHECK_FALSE(r.exhaustive);
  CHECK(is_berge_f_free(hyper_witness(r), catalog::cycle(4)));
  const auto j = to_json(r);
  CHECK(j["optimum_is_lower_bound"] == true);
  const auto g = max_f_free_edges(9, catalog::complete(3), {20, 10});
  CHECK_FALSE(g.exhaustive);
}
