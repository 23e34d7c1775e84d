#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramvc/graph.hpp"

namespace paramvc {

// Raised when an instance exceeds the configured size limit of a
// brute-force oracle. Limits are parameters, not constants, so callers can
// raise them deliberately instead of timing out.
class OracleLimitError : public std::runtime_error {
 public:
  explicit OracleLimitError(const std::string& message) : std::runtime_error(message) {}
};

inline constexpr int kDefaultVertexLimit = 22;
inline constexpr int kDefaultCapacitatedLimit = 18;
inline constexpr int kDefaultEdgeLimit = 24;

struct OracleResult {
  int optimum = 0;
  std::vector<int> witness;  // vertex set, sorted
};

struct EdgeOracleResult {
  int optimum = 0;
  std::vector<Edge> witness;  // edge set, sorted
};

// Exact minimum vertex cover by branching on a maximum-degree vertex with
// the standard "take v or take N(v)" rule.
OracleResult bf_min_vertex_cover(const Graph& g, int vertex_limit = kDefaultVertexLimit);

struct FeasibilityCheck {
  bool feasible = false;
  // Engaged on success: each edge paired with the cover endpoint it is
  // assigned to.
  std::vector<std::pair<Edge, int>> assignment;
};

// True iff cover touches every edge and a maximum flow over the
// edge-to-cover-vertex incidence network routes all m edges within the
// per-vertex capacities.
FeasibilityCheck capacitated_cover_feasible(const Graph& g, const std::vector<int>& capacity,
                                            const std::vector<int>& cover);

// Minimum capacitated vertex cover via branch-and-bound over vertex
// statuses; covering and capacity both prune the search. With size_cap >= 0
// the search is truncated and nullopt means "optimum exceeds size_cap";
// otherwise nullopt means no feasible cover exists at all.
std::optional<OracleResult> bf_min_capacitated_vc(const Graph& g,
                                                  const std::vector<int>& capacity,
                                                  int vertex_limit = kDefaultCapacitatedLimit,
                                                  int size_cap = -1);

// Exact minimum dominating set by subset enumeration in increasing size.
OracleResult bf_min_dominating_set(const Graph& g, int vertex_limit = kDefaultVertexLimit);

// Exact maximum independent set by branching; complements bf_min_vertex_cover.
OracleResult bf_max_independent_set(const Graph& g, int vertex_limit = kDefaultVertexLimit);

// Exact minimum edge bipartization by enumerating edge subsets in
// increasing size. With size_cap >= 0, nullopt means the optimum exceeds
// size_cap.
std::optional<EdgeOracleResult> bf_min_edge_bipartization(const Graph& g,
                                                          int edge_limit = kDefaultEdgeLimit,
                                                          int size_cap = -1);

// Exact maximum matching by enumerating edge subsets.
EdgeOracleResult bf_max_matching(const Graph& g, int edge_limit = kDefaultEdgeLimit);

}  // namespace paramvc
