#pragma once

#include <optional>
#include <vector>

#include "paramvc/graph.hpp"

namespace paramvc {

// Edge set whose removal leaves the graph bipartite, together with a proper
// two-coloring of the residual graph.
struct Bipartization {
  std::vector<Edge> removed;  // sorted lexicographically
  TwoColoring residual_coloring;
};

// Exact minimum edge bipartization under a budget. Returns a minimum-size
// solution if one of size <= budget exists, nullopt otherwise. Iterative
// compression: edges are added one at a time while a minimum bipartization
// of the processed prefix is maintained; whenever the current solution
// stops working it is recompressed by enumerating the 2^|X| consistent
// side-assignments of the endpoints of the (subdivided) solution edges and
// taking a minimum cut between the induced terminal sets. The exponential
// factor is therefore 2^(opt+1), never more than 2^(budget+1).
std::optional<Bipartization> min_edge_bipartization(const Graph& g, int budget);

// True iff g minus the given edge set is bipartite. Every listed edge must
// exist in g.
bool is_edge_bipartization(const Graph& g, const std::vector<Edge>& removed);

}  // namespace paramvc
