#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "paramvc/dimacs.hpp"
#include "paramvc/graph.hpp"
#include "testutil.hpp"

using namespace paramvc;

namespace {

DimacsInstance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void check_witness(const Graph& g, const OddCycleWitness& w) {
  const int len = static_cast<int>(w.cycle.size());
  REQUIRE(len >= 3);
  CHECK(len % 2 == 1);
  std::vector<int> sorted = w.cycle;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (int i = 0; i < len; ++i) CHECK(g.has_edge(w.cycle[i], w.cycle[(i + 1) % len]));
}

}  // namespace

TEST_CASE("dimacs parses a triangle") {
  auto inst = parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(inst.graph.vertex_count() == 3);
  CHECK(inst.graph.edge_count() == 3);
  CHECK(inst.graph.has_edge(0, 2));
  CHECK(!inst.capacities.has_value());
}

TEST_CASE("dimacs parses isolated vertices and comments") {
  auto inst = parse("c empty edge set\np edge 2 0\n");
  CHECK(inst.graph.vertex_count() == 2);
  CHECK(inst.graph.edge_count() == 0);
}

TEST_CASE("dimacs rejects malformed input with line numbers") {
  CHECK_THROWS_WITH_AS(parse("p edge 2 1\ne 1 1\n"), "line 2: self-loop at vertex 1",
                       DimacsError);
  CHECK_THROWS_AS(parse("p edge 2 2\ne 1 2\ne 2 1\n"), DimacsError);   // duplicate edge
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 3\n"), DimacsError);          // out of range
  CHECK_THROWS_AS(parse("p edge 2 2\ne 1 2\n"), DimacsError);          // too few edges
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 2\ne 1 2\n"), DimacsError);   // too many edges
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1  2\n"), DimacsError);         // double space
  CHECK_THROWS_AS(parse("e 1 2\n"), DimacsError);                      // edge before header
  CHECK_THROWS_AS(parse("p edge 2 1\nq 1 2\n"), DimacsError);          // unknown line
  CHECK_THROWS_AS(parse(""), DimacsError);                             // missing header
  try {
    parse("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\ne 1 3\n");
    FAIL("expected a parse error");
  } catch (const DimacsError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("dimacs capacity extension") {
  auto inst = parse("p edge 3 2\ne 1 2\ne 2 3\nx 2 1\n");
  REQUIRE(inst.capacities.has_value());
  CHECK((*inst.capacities) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\nx 2 1\ne 2 3\n"), DimacsError);  // x before edges
  CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\ne 2 3\nx 2 5\n"), DimacsError);  // above degree
  CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\ne 2 3\nx 2 1\nx 2 1\n"), DimacsError);
}

TEST_CASE("dimacs round trip is byte exact") {
  const std::string text = "p edge 4 3\ne 1 2\ne 1 4\ne 2 3\nx 1 1\n";
  auto inst = parse(text);
  std::ostringstream out;
  write_dimacs(out, inst.graph, &*inst.capacities);
  CHECK(out.str() == text);
}

TEST_CASE("graph construction validates") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("max_degree") {
  CHECK(max_degree(testutil::star(3)) == 3);
  CHECK(max_degree(testutil::cycle(5)) == 2);
  CHECK(max_degree(Graph(4, {})) == 0);
}

TEST_CASE("bipartition on even cycle") {
  auto result = bipartition(testutil::cycle(4));
  REQUIRE(std::holds_alternative<TwoColoring>(result));
  const auto& coloring = std::get<TwoColoring>(result);
  int left = 0;
  for (auto side : coloring.side)
    if (side == Side::Left) ++left;
  CHECK(left == 2);
  CHECK(coloring.side[0] == Side::Left);
}

TEST_CASE("bipartition on a triangle yields a 3-cycle witness") {
  auto result = bipartition(testutil::complete(3));
  REQUIRE(std::holds_alternative<OddCycleWitness>(result));
  const auto& witness = std::get<OddCycleWitness>(result);
  CHECK(witness.cycle.size() == 3);
  check_witness(testutil::complete(3), witness);
}

TEST_CASE("bipartition on the Petersen graph finds an odd cycle of length 5") {
  Graph g = testutil::petersen();
  CHECK(testutil::odd_girth(g) == 5);  // no shorter odd cycle exists
  auto result = bipartition(g);
  REQUIRE(std::holds_alternative<OddCycleWitness>(result));
  const auto& witness = std::get<OddCycleWitness>(result);
  CHECK(witness.cycle.size() == 5);
  check_witness(g, witness);
}

TEST_CASE("bipartition agrees with exhaustive odd-cycle search") {
  std::mt19937 rng(7001);
  for (int round = 0; round < 300; ++round) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = testutil::random_graph(n, n, rng);
    auto result = bipartition(g);
    if (testutil::subset_is_bipartite(g)) {
      REQUIRE(std::holds_alternative<TwoColoring>(result));
      CHECK(is_valid_two_coloring(g, std::get<TwoColoring>(result)));
    } else {
      REQUIRE(std::holds_alternative<OddCycleWitness>(result));
      check_witness(g, std::get<OddCycleWitness>(result));
    }
  }
}

TEST_CASE("connected components") {
  Graph two_triangles = testutil::cliques(2, 3);
  auto components = connected_components(two_triangles);
  REQUIRE(components.size() == 2);
  CHECK(components[0] == std::vector<int>{0, 1, 2});
  CHECK(components[1] == std::vector<int>{3, 4, 5});
  CHECK(connected_components(testutil::cycle(5)).size() == 1);
  CHECK(connected_components(Graph(3, {})).size() == 3);
}

TEST_CASE("components partition the vertex set without crossing edges") {
  std::mt19937 rng(7002);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = testutil::random_graph(n, 4, rng);
    auto components = connected_components(g);
    std::vector<int> owner(n, -1);
    for (std::size_t c = 0; c < components.size(); ++c)
      for (int v : components[c]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(c);
      }
    for (int v = 0; v < n; ++v) CHECK(owner[v] >= 0);
    for (const auto& [u, v] : g.edges()) CHECK(owner[u] == owner[v]);
  }
}

TEST_CASE("classify_component") {
  Graph k4 = testutil::complete(4);
  CHECK(classify_component(k4, {0, 1, 2, 3}, 3) == ComponentClass::CompleteBPlusOne);
  Graph c5 = testutil::cycle(5);
  CHECK(classify_component(c5, {0, 1, 2, 3, 4}, 2) == ComponentClass::OddCycle);
  Graph p4 = testutil::path(4);
  CHECK(classify_component(p4, {0, 1, 2, 3}, 2) == ComponentClass::Other);
  // K_3 with bound 2 is K_{B+1} first, despite also being an odd cycle.
  Graph k3 = testutil::complete(3);
  CHECK(classify_component(k3, {0, 1, 2}, 2) == ComponentClass::CompleteBPlusOne);
  CHECK(classify_component(k3, {0, 1, 2}, 3) == ComponentClass::Other);
  CHECK_THROWS_AS(classify_component(k4, {0, 1, 2, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_component(testutil::cliques(2, 3), {0, 1}, 3),
                  std::invalid_argument);  // not a whole component
}

TEST_CASE("greedy coloring basics") {
  Graph k3 = testutil::complete(3);
  auto colors = greedy_coloring(k3, {0, 1, 2});
  CHECK(*std::max_element(colors.begin(), colors.end()) == 2);

  Graph c4 = testutil::cycle(4);
  colors = greedy_coloring(c4, {0, 1, 2, 3});
  CHECK(*std::max_element(colors.begin(), colors.end()) == 1);

  // Star with the center last: leaves all get color 0, center gets 1.
  Graph star = testutil::star(3);
  colors = greedy_coloring(star, {1, 2, 3, 0});
  CHECK(colors[0] == 1);
  CHECK(*std::max_element(colors.begin(), colors.end()) == 1);

  CHECK_THROWS_AS(greedy_coloring(k3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(greedy_coloring(k3, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("greedy coloring is proper and uses at most max degree + 1 colors") {
  std::mt19937 rng(7003);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = testutil::random_graph(n, n, rng);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    auto colors = greedy_coloring(g, order);
    for (const auto& [u, v] : g.edges()) CHECK(colors[u] != colors[v]);
    for (int v = 0; v < n; ++v) CHECK(colors[v] <= max_degree(g));
  }
}

TEST_CASE("edge induced subgraph") {
  Graph k3 = testutil::complete(3);
  auto empty = edge_induced_subgraph(k3, {});
  CHECK(empty.graph.vertex_count() == 0);
  CHECK(empty.graph.edge_count() == 0);

  auto all = edge_induced_subgraph(k3, k3.edges());
  CHECK(all.graph.vertex_count() == 3);
  CHECK(all.graph.edge_count() == 3);

  auto one = edge_induced_subgraph(k3, {{0, 2}});
  CHECK(one.graph.vertex_count() == 2);
  CHECK(one.graph.edge_count() == 1);
  CHECK(one.to_original == std::vector<int>{0, 2});

  CHECK_THROWS_AS(edge_induced_subgraph(testutil::path(3), {{0, 2}}), std::invalid_argument);
}

TEST_CASE("edge induced subgraph has |D| edges and no isolated vertices") {
  std::mt19937 rng(7004);
  for (int round = 0; round < 100; ++round) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = testutil::random_graph(n, n, rng);
    if (g.edge_count() == 0) continue;
    std::vector<Edge> subset;
    for (const auto& e : g.edges())
      if (rng() & 1u) subset.push_back(e);
    auto sub = edge_induced_subgraph(g, subset);
    CHECK(sub.graph.edge_count() == static_cast<int>(subset.size()));
    for (int v = 0; v < sub.graph.vertex_count(); ++v) CHECK(sub.graph.degree(v) >= 1);
  }
}

TEST_CASE("delete vertices and edges") {
  Graph k3 = testutil::complete(3);
  auto sub = delete_vertices(k3, {0});
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.to_original == std::vector<int>{1, 2});

  Graph c5 = testutil::cycle(5);
  Graph p5 = delete_edges(c5, {{0, 4}});
  CHECK(p5.edge_count() == 4);
  CHECK(std::holds_alternative<TwoColoring>(bipartition(p5)));

  Graph same = delete_edges(c5, {});
  CHECK(same.edges() == c5.edges());
  auto same_vertices = delete_vertices(c5, {});
  CHECK(same_vertices.graph.edges() == c5.edges());

  CHECK_THROWS_AS(delete_vertices(k3, {5}), std::invalid_argument);
  CHECK_THROWS_AS(delete_edges(testutil::path(3), {{0, 2}}), std::invalid_argument);
}
