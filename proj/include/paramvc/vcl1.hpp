#pragma once

#include <optional>
#include <vector>

#include "paramvc/certificate.hpp"
#include "paramvc/edge_bipartization.hpp"
#include "paramvc/graph.hpp"

namespace paramvc {

// Decision instance: does graph (max degree <= degree_bound) have a vertex
// cover of at most m/degree_bound + k vertices? The threshold is compared
// exactly: |C| <= m/B + k  <=>  B*|C| <= m + B*k.
struct Vcl1Instance {
  Graph graph;
  int degree_bound = 1;
  int k = 0;
};

// Polynomial test for a cover of size exactly m/B: the graph must be
// bipartite with no isolated vertices, and every component must offer a
// partite side whose vertices all have degree exactly B. Picking one such
// side per component yields the cover.
std::optional<CoverCertificate> check_exact_lower_bound(const Graph& g, int degree_bound);

// All vertex sets obtainable by picking one endpoint per edge, deduplicated
// in first-seen order (endpoint choices enumerated as ascending bitmasks,
// bit 0 = first edge, unset bit = smaller endpoint). The family contains
// every minimal vertex cover of h. h must have no isolated vertices.
std::vector<std::vector<int>> enumerate_pi_covers(const Graph& h);

struct Vcl1Stats {
  long long pi_covers_examined = 0;
  int bipartization_size = -1;
};

// Minimum vertex cover of g, computed as the best of C' union a minimum
// cover of the bipartite graph g - C' over all pi-covers C' of g[D].
// Ties broken by lexicographically smallest vertex set. The pi-cover loop
// may be split across threads; the outcome is thread-count independent.
CoverCertificate min_vc_with_bipartization(const Graph& g, const Bipartization& bip,
                                           int threads = 1, Vcl1Stats* stats = nullptr);

struct Vcl1Result {
  bool yes = false;
  std::optional<CoverCertificate> certificate;
  Vcl1Stats stats;
};

Vcl1Result solve_vcl1(const Vcl1Instance& instance, int threads = 1);

}  // namespace paramvc
