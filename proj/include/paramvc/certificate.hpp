#pragma once

#include <optional>
#include <vector>

#include "paramvc/graph.hpp"

namespace paramvc {

// Vertex set claimed to cover every edge of its graph, possibly with an
// edge-to-endpoint assignment when capacities are in play.
struct CoverCertificate {
  std::vector<int> vertices;  // sorted ascending
  int claimed_size = 0;
  std::optional<std::vector<std::pair<Edge, int>>> assignment;
};

CoverCertificate make_cover_certificate(std::vector<int> vertices);

// First edge with neither endpoint in cover, if any.
std::optional<Edge> first_uncovered_edge(const Graph& g, const std::vector<int>& cover);

inline bool covers_all_edges(const Graph& g, const std::vector<int>& cover) {
  return !first_uncovered_edge(g, cover).has_value();
}

}  // namespace paramvc
