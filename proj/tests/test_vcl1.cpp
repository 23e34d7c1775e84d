#include <doctest.h>

#include <random>
#include <set>

#include "paramvc/vcl1.hpp"
#include "testutil.hpp"

using namespace paramvc;

namespace {

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& family) {
  return {family.begin(), family.end()};
}

}  // namespace

TEST_CASE("check_exact_lower_bound accepts the stars witness") {
  Graph two_stars = testutil::stars(2, 3);
  auto cert = check_exact_lower_bound(two_stars, 3);
  REQUIRE(cert.has_value());
  CHECK(cert->vertices == std::vector<int>{0, 4});  // the two centers
  CHECK(cert->claimed_size == 2);
}

TEST_CASE("check_exact_lower_bound rejects non-bipartite graphs") {
  CHECK(!check_exact_lower_bound(testutil::complete(3), 2).has_value());
}

TEST_CASE("check_exact_lower_bound on K_{2,3}") {
  Graph g = testutil::complete_bipartite(2, 3);
  CHECK(testutil::subset_min_vertex_cover(g) == 2);  // m/B = 6/3
  auto cert = check_exact_lower_bound(g, 3);
  REQUIRE(cert.has_value());
  CHECK(cert->vertices == std::vector<int>{0, 1});
}

TEST_CASE("check_exact_lower_bound rejects isolated vertices and indivisible m") {
  Graph star_plus_isolated(5, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(!check_exact_lower_bound(star_plus_isolated, 3).has_value());
  CHECK(!check_exact_lower_bound(testutil::path(3), 3).has_value());  // 3 does not divide 2
  CHECK_THROWS_AS(check_exact_lower_bound(testutil::star(3), 2), std::invalid_argument);
}

TEST_CASE("check_exact_lower_bound matches brute force on random connected graphs") {
  std::mt19937 rng(7301);
  for (int round = 0; round < 400; ++round) {
    int bound = 2 + static_cast<int>(rng() % 2);
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = testutil::random_connected_graph(n, bound, rng);
    bool expected = g.edge_count() % bound == 0 &&
                    testutil::subset_min_vertex_cover(g) * bound == g.edge_count();
    auto cert = check_exact_lower_bound(g, bound);
    CHECK(cert.has_value() == expected);
    if (cert) {
      CHECK(cert->claimed_size * bound == g.edge_count());
      CHECK(covers_all_edges(g, cert->vertices));
    }
  }
}

TEST_CASE("pi covers of a single edge") {
  Graph edge(2, {{0, 1}});
  CHECK(as_set(enumerate_pi_covers(edge)) ==
        std::set<std::vector<int>>{{0}, {1}});
}

TEST_CASE("pi covers of a 2-edge path") {
  Graph p3 = testutil::path(3);
  CHECK(as_set(enumerate_pi_covers(p3)) ==
        std::set<std::vector<int>>{{1}, {0, 1}, {1, 2}, {0, 2}});
}

TEST_CASE("pi covers of the empty graph") {
  auto covers = enumerate_pi_covers(Graph(0, {}));
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].empty());
  CHECK_THROWS_AS(enumerate_pi_covers(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("pi covers include every minimal vertex cover") {
  std::mt19937 rng(7302);
  for (int round = 0; round < 120; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = testutil::random_graph(n, n, rng);
    std::vector<int> isolated;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) isolated.push_back(v);
    Graph h = delete_vertices(g, isolated).graph;
    if (h.edge_count() == 0 || h.edge_count() > 12) continue;
    auto family = as_set(enumerate_pi_covers(h));
    CHECK(family.size() <= (1ull << h.edge_count()));
    for (const auto& cover : family) CHECK(covers_all_edges(h, cover));
    for (const auto& minimal : testutil::subset_minimal_vertex_covers(h))
      CHECK(family.count(minimal) == 1);
  }
}

TEST_CASE("min_vc_with_bipartization recovers optima") {
  Graph c5 = testutil::cycle(5);
  auto bip5 = min_edge_bipartization(c5, 1);
  REQUIRE(bip5.has_value());
  CHECK(min_vc_with_bipartization(c5, *bip5).claimed_size == 3);

  Graph k4 = testutil::complete(4);
  auto bip4 = min_edge_bipartization(k4, 2);
  REQUIRE(bip4.has_value());
  CHECK(min_vc_with_bipartization(k4, *bip4).claimed_size == 3);

  // Bipartite graph: the single empty pi-cover reduces to the Konig cover.
  Graph c6 = testutil::cycle(6);
  auto bip6 = min_edge_bipartization(c6, 0);
  REQUIRE(bip6.has_value());
  Vcl1Stats stats;
  auto cert = min_vc_with_bipartization(c6, *bip6, 1, &stats);
  CHECK(cert.claimed_size == 3);
  CHECK(stats.pi_covers_examined == 1);
}

TEST_CASE("min_vc_with_bipartization rejects invalid bipartizations") {
  Graph k4 = testutil::complete(4);
  Bipartization bogus;
  bogus.removed = {{0, 1}};
  bogus.residual_coloring.side.assign(4, Side::Left);
  CHECK_THROWS_AS(min_vc_with_bipartization(k4, bogus), std::invalid_argument);
}

TEST_CASE("min_vc_with_bipartization equals brute force for any valid bipartization") {
  std::mt19937 rng(7303);
  for (int round = 0; round < 120; ++round) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = testutil::random_graph(n, 4, rng);
    auto bip = min_edge_bipartization(g, g.edge_count());
    REQUIRE(bip.has_value());
    auto cert = min_vc_with_bipartization(g, *bip);
    CHECK(cert.claimed_size == testutil::subset_min_vertex_cover(g));
    CHECK(covers_all_edges(g, cert.vertices));
  }
}

TEST_CASE("multithreaded pi-cover scan returns the identical cover") {
  std::mt19937 rng(7304);
  for (int round = 0; round < 40; ++round) {
    int n = 4 + static_cast<int>(rng() % 7);
    Graph g = testutil::random_graph(n, 4, rng);
    auto bip = min_edge_bipartization(g, g.edge_count());
    REQUIRE(bip.has_value());
    auto sequential = min_vc_with_bipartization(g, *bip, 1);
    auto parallel = min_vc_with_bipartization(g, *bip, 4);
    CHECK(sequential.vertices == parallel.vertices);
  }
}

TEST_CASE("solve_vcl1 on the tight example families") {
  Vcl1Result stars = solve_vcl1({testutil::stars(2, 3), 3, 1});
  CHECK(stars.yes);
  CHECK(stars.certificate->claimed_size == 2);

  Vcl1Result tight = solve_vcl1({testutil::cycle(5), 2, 0});
  CHECK(!tight.yes);

  Vcl1Result loose = solve_vcl1({testutil::cycle(5), 2, 1});
  CHECK(loose.yes);
  CHECK(loose.certificate->claimed_size == 3);
}

TEST_CASE("solve_vcl1 validates the degree bound") {
  CHECK_THROWS_WITH_AS(solve_vcl1({testutil::star(3), 2, 1}),
                       "vertex 1 has degree 3 exceeding bound 2", std::invalid_argument);
  CHECK_THROWS_AS(solve_vcl1({testutil::cycle(5), 2, -1}), std::invalid_argument);
}

TEST_CASE("solve_vcl1 matches the oracle decision on random instances") {
  std::mt19937 rng(7305);
  for (int round = 0; round < 250; ++round) {
    int bound = 2 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 12);
    int k = static_cast<int>(rng() % 4);
    Graph g = testutil::random_graph(n, bound, rng);
    Vcl1Result result = solve_vcl1({g, bound, k});
    long long min_vc = testutil::subset_min_vertex_cover(g);
    bool expected = bound * min_vc <= g.edge_count() + static_cast<long long>(bound) * k;
    CHECK(result.yes == expected);
    if (result.yes) {
      CHECK(result.certificate->claimed_size == min_vc);
      CHECK(covers_all_edges(g, result.certificate->vertices));
    }
    CHECK(result.stats.pi_covers_examined <= (1LL << (k * bound)));
  }
}
