#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace paramvc {

// Unordered edge, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph over dense 0-based vertex ids. Immutable after
// construction; the edge list is kept sorted and the adjacency lists mirror
// it exactly. Construction rejects self-loops, duplicate edges and
// out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted lexicographically
  std::vector<std::vector<int>> adj_;  // each list sorted ascending
};

enum class Side : unsigned char { Left, Right };

// Proper 2-coloring: every edge of the associated graph joins Left to Right.
struct TwoColoring {
  std::vector<Side> side;
};

// Closed walk of odd length >= 3 on distinct, consecutively adjacent
// vertices (the last vertex is adjacent to the first).
struct OddCycleWitness {
  std::vector<int> cycle;
};

enum class ComponentClass { CompleteBPlusOne, OddCycle, Other };

// Subgraph plus the translation from its ids back to the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new id -> original id, ascending
};

int max_degree(const Graph& g);

// Deterministic BFS layering: components processed by minimum vertex id,
// the component's lowest id lands on the Left side, neighbors visited in
// ascending order. Non-bipartite graphs yield the first odd cycle found.
std::variant<TwoColoring, OddCycleWitness> bipartition(const Graph& g);

bool is_valid_two_coloring(const Graph& g, const TwoColoring& coloring);

// Partition of [0, n) into maximal connected sets, ordered by minimum
// vertex id; each set sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Brooks-style exception test for one connected component: K_{B+1}, or an
// odd cycle when B = 2, or neither. Requires max_degree(g) <= degree_bound
// and component to be an actual connected component of g.
ComponentClass classify_component(const Graph& g, const std::vector<int>& component,
                                  int degree_bound);

// Smallest-free-color greedy along the given vertex order (a permutation
// of [0, n)). Uses at most max_degree(g) + 1 colors.
std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order);

// Graph on the endpoints of edge_set whose edges are exactly edge_set.
// Every edge must exist in g; the result has no isolated vertices.
InducedSubgraph edge_induced_subgraph(const Graph& g, const std::vector<Edge>& edge_set);

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed);

Graph delete_edges(const Graph& g, const std::vector<Edge>& removed);

}  // namespace paramvc
