#include "paramvc/certificate.hpp"

#include <algorithm>

namespace paramvc {

CoverCertificate make_cover_certificate(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  CoverCertificate cert;
  cert.claimed_size = static_cast<int>(vertices.size());
  cert.vertices = std::move(vertices);
  return cert;
}

std::optional<Edge> first_uncovered_edge(const Graph& g, const std::vector<int>& cover) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : cover)
    if (v >= 0 && v < g.vertex_count()) in[v] = 1;
  for (const auto& e : g.edges())
    if (!in[e.first] && !in[e.second]) return e;
  return std::nullopt;
}

}  // namespace paramvc
