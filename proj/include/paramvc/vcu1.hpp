#pragma once

#include <optional>
#include <vector>

#include "paramvc/certificate.hpp"
#include "paramvc/graph.hpp"

namespace paramvc {

// Decision instance: does graph (max degree <= degree_bound) have a vertex
// cover of at most n*B/(B+1) - k vertices? Compared exactly:
// (B+1)*|C| <= n*B - k*(B+1).
struct Vcu1Instance {
  Graph graph;
  int degree_bound = 1;
  int k = 1;
};

// Proper coloring of one connected component with at most degree_bound
// colors. Preconditions: the component is a connected component of g, all
// degrees <= degree_bound, degree_bound >= 2, and the component is neither
// K_{B+1} nor (for B = 2) an odd cycle. Returns per-vertex colors, -1
// outside the component.
std::vector<int> brooks_coloring(const Graph& g, const std::vector<int>& component,
                                 int degree_bound);

struct Vcu1Result {
  bool yes = false;
  std::optional<CoverCertificate> certificate;
};

// Exact value of the stricter alternative bound n(B-1)/B - k as an integer
// fraction {numerator, denominator}. Only the value is offered; deciding
// covers against this bound is out of scope.
std::pair<long long, long long> modified_upper_bound(int n, int degree_bound, int k);

// Component decomposition: K_{B+1} components cost exactly B, odd cycles
// (B = 2) exactly ceil(len/2); if the remaining components hold at least
// k*B*(B+1) vertices the Brooks bound forces a yes, otherwise they form a
// kernel small enough to solve exactly.
Vcu1Result solve_vcu1(const Vcu1Instance& instance);

}  // namespace paramvc
