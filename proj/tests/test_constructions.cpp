#include <doctest.h>

#include <set>

#include "berge/berge.hpp"
#include "berge/catalog.hpp"
#include "berge/constructions.hpp"
#include "berge/error.hpp"
#include "support/oracles.hpp"

using namespace berge;

TEST_CASE("kr construction arithmetic") {
  const auto h = kr_construction(12, 3);
  CHECK(h.edge_count() == 16);
  for (std::size_t i = 0; i < h.edge_count(); ++i) CHECK(h.edge_size(i) == 3);
  CHECK(power_sum(h, 1) == 48);
  const auto b = kr_construction(4, 2);
  CHECK(b.edge_count() == 4);
  CHECK(power_sum(b, 1) == 8);
  CHECK(shadow(b).edge_count() == 4);  // K_{2,2}
  for (int r = 2; r <= 5; ++r)
    for (int n = r; n <= 6 * r; n += r) {
      const auto k = kr_construction(n, r);
      CHECK(k.edge_count() == static_cast<std::size_t>((n / r) * (n / r)));
      CHECK(power_sum(k, 1) * r == static_cast<std::int64_t>(n) * n);
    }
  CHECK_THROWS_AS(kr_construction(10, 3), Error);
  CHECK_THROWS_AS(kr_construction(6, 1), Error);
}

TEST_CASE("kr construction is Berge-K_r-free") {
  for (int r = 3; r <= 4; ++r)
    for (int n = 2 * r; n <= 3 * r; n += r) {
      const auto h = kr_construction(n, r);
      CHECK(is_berge_f_free(h, catalog::complete(r)));
      CHECK_FALSE(oracle::contains_berge(h, catalog::complete(r)));
    }
}

TEST_CASE("single edge") {
  const auto h = single_edge(5);
  CHECK(h.edges() == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(weigh(h, WeightFunction::size_squared(), 0).total == 25);
  CHECK(is_berge_f_free(h, catalog::path(3)));
}

TEST_CASE("greedy output is free and maximal") {
  const auto k3 = catalog::complete(3);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = greedy_maximal(6, k3, {3, 3, seed, 10});
    const auto& h = r.hypergraph;
    CHECK(r.enumerated_all);
    CHECK(is_berge_f_free(h, k3));
    std::set<std::vector<int>> present(h.edges().begin(), h.edges().end());
    CHECK(present.size() == h.edge_count());
    for (const auto& c : oracle::candidates(6, 3, 3))
      if (!present.count(c)) CHECK(oracle::contains_berge(h.with_edge(c), k3));
  }
  CHECK(greedy_maximal(6, k3, {3, 3, 7, 10}).hypergraph == greedy_maximal(6, k3, {3, 3, 7, 10}).hypergraph);
  CHECK(greedy_maximal(6, catalog::empty(2), {2, 3, 1, 10}).hypergraph.edge_count() == 0);
  CHECK_THROWS_AS(greedy_maximal(6, k3, {4, 3, 1, 10}), Error);
}

TEST_CASE("greedy with random draws stays free") {
  const auto c4 = catalog::cycle(4);
  const auto r = greedy_maximal(24, c4, {4, 6, 11, 2});
  CHECK_FALSE(r.enumerated_all);
  CHECK(is_berge_f_free(r.hypergraph, c4));
  CHECK(r.hypergraph.edge_count() > 0);
}

TEST_CASE("SplitMix64 is reproducible") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(0);
  CHECK(c.next() == 0xe220a8397b1dcdafULL);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
}
