#pragma once

#include <vector>

#include "paramvc/graph.hpp"

namespace paramvc {

// Set of vertex-disjoint edges, kept sorted lexicographically.
struct Matching {
  std::vector<Edge> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
};

// Maximum-cardinality matching of a bipartite graph via augmenting paths.
// Deterministic: lowest-indexed unmatched left vertex first, neighbors in
// ascending id.
Matching max_bipartite_matching(const Graph& g, const TwoColoring& coloring);

// Minimum vertex cover of a bipartite graph, built by alternating
// reachability from the unmatched left vertices; its size equals the
// maximum matching size.
std::vector<int> min_vc_bipartite(const Graph& g, const TwoColoring& coloring);

// Scans edges in the given order (lexicographic by default) and keeps each
// edge whose endpoints are both still unmatched. Maximal, not maximum.
Matching greedy_maximal_matching(const Graph& g);
Matching greedy_maximal_matching(const Graph& g, const std::vector<Edge>& order);

bool is_matching(const Graph& g, const Matching& m);

// True iff no edge of g has both endpoints unmatched. Throws if m is not a
// matching of g.
bool is_maximal_matching(const Graph& g, const Matching& m);

}  // namespace paramvc
