#include <doctest.h>

#include "berge/berge.hpp"
#include "berge/catalog.hpp"
#include "berge/classify.hpp"
#include "berge/constructions.hpp"
#include "berge/error.hpp"
#include "berge/embed.hpp"

using namespace berge;

namespace {

auto blue_of(const EdgeClassification& c, int u, int v) -> bool {
  for (const auto& e : c.edges)
    if (e.edge == Edge::make(u, v)) return e.blue;
  FAIL("pair not in shadow");
  return false;
}

}  // namespace

TEST_CASE("classification examples") {
  const auto k3 = catalog::complete(3);
  const auto one = classify_edges(Hypergraph(3, {{0, 1, 2}}), k3);
  CHECK(one.blue_limit == 2);
  CHECK(one.blue_count() == 3);
  CHECK(classify_edges(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}), k3).blue_count() == 0);
  const auto fan = classify_edges(Hypergraph(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), k3);
  CHECK_FALSE(blue_of(fan, 0, 1));
  CHECK(fan.non_blue_count() == 1);
  CHECK(fan.blue_count() == 6);
  const auto set = classify_edges(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}), k3, MultiplicitySemantics::Set);
  CHECK(set.blue_count() == 3);
  CHECK(classification_csv(one).starts_with("u,v,multiplicity,blue\n0,1,1,1\n"));
  CHECK_THROWS_AS(classify_edges(Hypergraph(3, {{0, 1, 2}}), catalog::empty(2)), Error);
}

TEST_CASE("blue edge in every copy") {
  const auto k3 = catalog::complete(3);
  CHECK(verify_blue_in_every_copy(Hypergraph(4), k3).status == CheckStatus::Ok);
  CHECK(verify_blue_in_every_copy(kr_construction(12, 3), k3).status == CheckStatus::Ok);
  const Hypergraph triple3(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  for (bool enumerate : {false, true}) {
    CheckOptions o;
    o.enumerate_shadow_copies = enumerate;
    const auto c = verify_blue_in_every_copy(triple3, k3, o);
    CHECK(c.status == CheckStatus::Counterexample);
    REQUIRE(c.copy.has_value());
    CHECK(c.copy->size() == 3);
  }
  std::vector<std::vector<int>> bipartite;  // every cross pair three times: non-blue graph K_{5,5}
  for (int a = 0; a < 5; ++a)
    for (int b = 5; b < 10; ++b)
      for (int copy = 0; copy < 3; ++copy) bipartite.push_back({a, b});
  CheckOptions tight;
  tight.max_nodes = 1;
  CHECK(verify_blue_in_every_copy(Hypergraph(10, bipartite), k3, tight).status == CheckStatus::Truncated);
  CHECK(verify_blue_in_every_copy(Hypergraph(10, bipartite), k3).status == CheckStatus::Ok);
}

TEST_CASE("non-blue pairs inside a hyperedge") {
  const auto k3 = catalog::complete(3);
  const auto kr = kr_construction(12, 3);
  for (std::size_t i = 0; i < kr.edge_count(); ++i)
    CHECK(verify_nonblue_within_edge_f_free(kr, k3, i).status == CheckStatus::Ok);
  CHECK(verify_nonblue_within_edge_f_free(Hypergraph(3, {{0, 1, 2}}), k3, 0).status == CheckStatus::Ok);
  CHECK_THROWS_AS(verify_nonblue_within_edge_f_free(Hypergraph(3, {{0, 1}}), k3, 0), Error);
  CHECK_THROWS_AS(verify_nonblue_within_edge_f_free(Hypergraph(3, {{0, 1, 2}}), k3, 1), Error);
  const Hypergraph heavy(4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
  const auto c = verify_nonblue_within_edge_f_free(heavy, k3, 0);
  CHECK(c.status == CheckStatus::Counterexample);
  REQUIRE(c.copy.has_value());
  for (auto e : k3.edges()) CHECK(heavy.contains_pair(0, (*c.copy)[e.u], (*c.copy)[e.v]));
}

TEST_CASE("blue density") {
  const auto k3 = catalog::complete(3);
  const auto one = blue_density_report(Hypergraph(3, {{0, 1, 2}}), k3);
  CHECK(one.rows.size() == 1);
  CHECK(one.rows[0].ratio == doctest::Approx(1.0));
  const auto kr = blue_density_report(kr_construction(12, 3), k3);
  for (const auto& row : kr.rows) {
    CHECK(row.ratio > 0.0);
    CHECK(row.ratio <= 1.0);
  }
  const auto heavy = blue_density_report(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}), k3);
  for (const auto& row : heavy.rows) CHECK(row.ratio == doctest::Approx(0.0));
}

TEST_CASE("counting bound") {
  const auto k3 = catalog::complete(3);
  const auto b = blue_counting_bound(kr_construction(12, 3), k3);
  CHECK(b.holds());
  CHECK(b.blue_incidences == 32);  // the 16 singleton-block pairs are blue; block-internal pairs have multiplicity 4
  const auto greedy = greedy_maximal(9, catalog::cycle(4), {4, 5, 3, 10}).hypergraph;
  CHECK(blue_counting_bound(greedy, catalog::cycle(4)).holds());
}
