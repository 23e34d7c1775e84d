#include "paramvc/vcl1.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "paramvc/matching.hpp"

namespace paramvc {

namespace {

void require_degree_bound(const Graph& g, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > degree_bound)
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " has degree " +
                                  std::to_string(g.degree(v)) + " exceeding bound " +
                                  std::to_string(degree_bound));
}

}  // namespace

std::optional<CoverCertificate> check_exact_lower_bound(const Graph& g, int degree_bound) {
  require_degree_bound(g, degree_bound);
  const int m = g.edge_count();
  if (m % degree_bound != 0) return std::nullopt;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return std::nullopt;
  auto colored = bipartition(g);
  if (!std::holds_alternative<TwoColoring>(colored)) return std::nullopt;
  const auto& coloring = std::get<TwoColoring>(colored);

  // A qualifying side covers each of its component's edges exactly once, so
  // its vertices must all have degree exactly B and qualifying sides of one
  // component share the size m_c/B; any per-component selection therefore
  // sums to m/B.
  std::vector<int> cover;
  long long total = 0;
  for (const auto& component : connected_components(g)) {
    std::vector<int> left, right;
    for (int v : component)
      (coloring.side[v] == Side::Left ? left : right).push_back(v);
    auto qualifies = [&](const std::vector<int>& side) {
      if (side.empty()) return false;
      for (int v : side)
        if (g.degree(v) != degree_bound) return false;
      return true;
    };
    if (qualifies(left)) {
      cover.insert(cover.end(), left.begin(), left.end());
      total += static_cast<long long>(left.size());
    } else if (qualifies(right)) {
      cover.insert(cover.end(), right.begin(), right.end());
      total += static_cast<long long>(right.size());
    } else {
      return std::nullopt;
    }
  }
  if (total * degree_bound != m) throw std::logic_error("qualifying sides do not sum to m/B");
  auto cert = make_cover_certificate(std::move(cover));
  if (!covers_all_edges(g, cert.vertices)) throw std::logic_error("qualifying sides miss an edge");
  return cert;
}

std::vector<std::vector<int>> enumerate_pi_covers(const Graph& h) {
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) == 0)
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is isolated");
  const int m = h.edge_count();
  if (m > 30) throw std::invalid_argument("too many edges for pi-cover enumeration");
  std::vector<std::vector<int>> covers;
  std::set<std::vector<int>> seen;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> pick;
    pick.reserve(m);
    for (int j = 0; j < m; ++j) {
      const Edge& e = h.edges()[j];
      pick.push_back((mask >> j) & 1u ? e.second : e.first);
    }
    std::sort(pick.begin(), pick.end());
    pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
    if (seen.insert(pick).second) covers.push_back(std::move(pick));
  }
  return covers;
}

namespace {

struct Candidate {
  std::vector<int> cover;
  bool valid = false;
};

void consider(Candidate& best, std::vector<int> cover) {
  if (!best.valid || cover.size() < best.cover.size() ||
      (cover.size() == best.cover.size() && cover < best.cover)) {
    best.cover = std::move(cover);
    best.valid = true;
  }
}

// Candidate cover for one pi-cover of g[D]: the pi-cover itself plus a
// Konig minimum cover of the bipartite remainder.
std::vector<int> candidate_for(const Graph& g, const std::vector<int>& pi_cover) {
  InducedSubgraph rest = delete_vertices(g, pi_cover);
  auto colored = bipartition(rest.graph);
  if (!std::holds_alternative<TwoColoring>(colored))
    throw std::logic_error("graph minus a pi-cover is not bipartite");
  std::vector<int> cover = pi_cover;
  for (int v : min_vc_bipartite(rest.graph, std::get<TwoColoring>(colored)))
    cover.push_back(rest.to_original[v]);
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace

CoverCertificate min_vc_with_bipartization(const Graph& g, const Bipartization& bip,
                                           int threads, Vcl1Stats* stats) {
  if (!is_valid_two_coloring(delete_edges(g, bip.removed), bip.residual_coloring))
    throw std::invalid_argument("invalid bipartization for this graph");

  InducedSubgraph core = edge_induced_subgraph(g, bip.removed);
  std::vector<std::vector<int>> pi_covers = enumerate_pi_covers(core.graph);
  for (auto& cover : pi_covers) {
    for (int& v : cover) v = core.to_original[v];
    std::sort(cover.begin(), cover.end());
  }
  if (stats) {
    stats->pi_covers_examined = static_cast<long long>(pi_covers.size());
    stats->bipartization_size = static_cast<int>(bip.removed.size());
  }

  const int worker_count =
      std::max(1, std::min<int>(threads, static_cast<int>(pi_covers.size())));
  std::vector<Candidate> partial(worker_count);
  if (worker_count == 1) {
    for (const auto& pi_cover : pi_covers) consider(partial[0], candidate_for(g, pi_cover));
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (pi_covers.size() + worker_count - 1) / worker_count;
    for (int t = 0; t < worker_count; ++t) {
      workers.emplace_back([&, t] {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(pi_covers.size(), begin + chunk);
        for (std::size_t i = begin; i < end; ++i)
          consider(partial[t], candidate_for(g, pi_covers[i]));
      });
    }
    for (auto& worker : workers) worker.join();
  }
  Candidate best;
  for (auto& candidate : partial)
    if (candidate.valid) consider(best, std::move(candidate.cover));
  if (!best.valid) throw std::logic_error("no pi-cover candidates");
  return make_cover_certificate(std::move(best.cover));
}

Vcl1Result solve_vcl1(const Vcl1Instance& instance, int threads) {
  const Graph& g = instance.graph;
  require_degree_bound(g, instance.degree_bound);
  if (instance.k < 0) throw std::invalid_argument("k must be nonnegative");

  Vcl1Result result;
  auto bip = min_edge_bipartization(g, instance.k * instance.degree_bound);
  if (!bip) return result;  // no bipartization of size <= kB, hence answer no

  CoverCertificate cover = min_vc_with_bipartization(g, *bip, threads, &result.stats);
  // |C| <= m/B + k, cross-multiplied to stay in integers.
  const long long lhs = static_cast<long long>(instance.degree_bound) * cover.claimed_size;
  const long long rhs = static_cast<long long>(g.edge_count()) +
                        static_cast<long long>(instance.degree_bound) * instance.k;
  if (lhs <= rhs) {
    result.yes = true;
    result.certificate = std::move(cover);
  }
  return result;
}

}  // namespace paramvc
