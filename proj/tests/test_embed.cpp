#include <doctest.h>

#include <random>
#include <set>

#include "berge/catalog.hpp"
#include "berge/embed.hpp"
#include "berge/matching.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace berge;

TEST_CASE("copy counts") {
  CHECK(count_copies(catalog::complete(3), catalog::complete(3)) == 1);
  CHECK(count_copies(catalog::complete(4), catalog::complete(3)) == 4);
  CHECK(count_copies(catalog::cycle(4), catalog::complete(3)) == 0);
  CHECK(count_copies(catalog::complete(5), catalog::complete(3)) == 10);
  CHECK(count_copies(Graph(6), catalog::path(3)) == 0);
  CHECK(count_copies(catalog::complete(4), catalog::path(3)) == 12);
}

TEST_CASE("copy counts agree with the brute-force oracle") {
  std::mt19937_64 rng(3);
  const std::vector<Graph> patterns{catalog::complete(3), catalog::cycle(4), catalog::path(4), catalog::path(3),
                                    catalog::complete(4), Graph(3, {{0, 1}}), catalog::empty(2)};
  for (int trial = 0; trial < 120; ++trial) {
    const auto host = testing_support::random_graph(rng, 3 + trial % 5, 0.6);
    for (const auto& f : patterns) {
      CHECK(count_copies(host, f) == oracle::count_copies(host, f));
      CHECK(find_copy(host, f).has_value() == oracle::contains_graph(host, f));
    }
  }
}

TEST_CASE("copies are distinct and valid") {
  const auto host = catalog::complete(5);
  const auto f = catalog::cycle(4);
  std::set<std::pair<std::set<int>, std::set<std::pair<int, int>>>> seen;
  for (const auto& map : find_embeddings(host, f)) {
    std::set<std::pair<int, int>> edges;
    for (auto e : f.edges()) {
      CHECK(host.has_edge(map[e.u], map[e.v]));
      edges.insert(std::minmax(map[e.u], map[e.v]));
    }
    CHECK(seen.insert({std::set<int>(map.begin(), map.end()), edges}).second);
  }
  CHECK(seen.size() == 15);
  CHECK(automorphisms(f).size() == 8);
}

TEST_CASE("copies through a vertex or edge") {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const auto k3 = catalog::complete(3);
  CHECK(find_copy_through_vertex(HostView::of(g), k3, 1).has_value());
  CHECK_FALSE(find_copy_through_vertex(HostView::of(g), k3, 3).has_value());
  const auto m = find_copy_through_edge(HostView::of(g), k3, 0, 2);
  REQUIRE(m.has_value());
  CHECK(std::set<int>(m->begin(), m->end()) == std::set<int>{0, 1, 2});
  CHECK_FALSE(find_copy_through_edge(HostView::of(g), k3, 3, 4).has_value());
}

TEST_CASE("node budget truncates") {
  const auto stats = for_each_copy(catalog::complete(8), catalog::complete(4), [](auto) { return true; }, {5});
  CHECK(stats.truncated);
}

TEST_CASE("incremental SDR and Hopcroft-Karp agree") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int left = 1 + trial % 7, right = 1 + (trial / 7) % 7;
    std::vector<std::vector<std::uint32_t>> adj(left);
    std::bernoulli_distribution coin(0.4);
    for (int l = 0; l < left; ++l)
      for (int r = 0; r < right; ++r)
        if (coin(rng)) adj[l].push_back(r);
    const auto hk = hopcroft_karp(adj, right);
    const auto size_hk = std::count_if(hk.begin(), hk.end(), [](int r) { return r >= 0; });

    IncrementalSdr sdr(right, left);
    int size_inc = 0;
    for (int l = 0; l < left; ++l) size_inc += sdr.insert(l, adj[l]);
    CHECK(size_inc == size_hk);
    std::set<int> used;
    for (int l = 0; l < left; ++l) {
      const int r = sdr.representative(l);
      if (r < 0) continue;
      CHECK(std::find(adj[l].begin(), adj[l].end(), static_cast<std::uint32_t>(r)) != adj[l].end());
      CHECK(used.insert(r).second);
    }
    const auto snapshot = sdr.assignment();
    for (int l = 0; l < left; ++l) sdr.erase(l);
    sdr.restore(snapshot);
    CHECK(sdr.assignment() == snapshot);
  }
}
