#include "paramvc/edge_bipartization.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "paramvc/maxflow.hpp"

namespace paramvc {

namespace {

// Proper two-coloring of the graph (n, edges), or nullopt. Local variant so
// the compression loop can work on edge prefixes without rebuilding Graphs.
std::optional<std::vector<Side>> try_color(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = color[v] ^ 1;
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Side> side(n);
  for (int v = 0; v < n; ++v) side[v] = color[v] == 0 ? Side::Left : Side::Right;
  return side;
}

// Exact minimum bipartization of the graph (n, edges), given that removing
// the edges of `known` makes it bipartite. Each known edge uv is treated as
// a subdivided path u - s - t - v whose middle edge must end up properly
// colored; enumerating the two consistent flip values per known edge and
// cutting between the induced terminal sets covers every solution that is,
// without loss of generality, disjoint from the middle edges.
std::vector<Edge> compress(int n, const std::vector<Edge>& edges,
                           const std::vector<Edge>& known) {
  std::vector<Edge> rest;  // edges - known
  {
    std::vector<Edge> sorted_known = known;
    std::sort(sorted_known.begin(), sorted_known.end());
    for (const auto& e : edges)
      if (!std::binary_search(sorted_known.begin(), sorted_known.end(), e))
        rest.push_back(e);
  }
  auto base = try_color(n, rest);
  if (!base) throw std::logic_error("compression seeded with a non-bipartization");
  const int k = static_cast<int>(known.size());
  if (k == 0) return {};

  // Aux node layout: original vertices, then s_j = n + 2j, t_j = n + 2j + 1.
  // b_j records whether the extended base coloring makes s_j and t_j equal,
  // i.e. whether the middle edge needs its endpoints flipped apart.
  std::vector<char> parity(k);
  for (int j = 0; j < k; ++j) {
    Side s = (*base)[known[j].first] == Side::Left ? Side::Right : Side::Left;
    Side t = (*base)[known[j].second] == Side::Left ? Side::Right : Side::Left;
    parity[j] = s == t ? 1 : 0;
  }

  if (k > 30) throw std::runtime_error("bipartization size exceeds supported compression width");

  const int nodes = n + 2 * k + 2;
  const int source = n + 2 * k, sink = n + 2 * k + 1;
  int best_cut = std::numeric_limits<int>::max();
  std::vector<char> best_side;

  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    MaxFlow flow(nodes);
    for (const auto& [u, v] : rest) flow.add_undirected_edge(u, v, 1);
    // Terminals: flipped path endpoints attach to the source, unflipped to
    // the sink, with effectively infinite capacity.
    const int inf = static_cast<int>(edges.size()) + 2 * k + 1;
    for (int j = 0; j < k; ++j) {
      flow.add_undirected_edge(known[j].first, n + 2 * j, 1);
      flow.add_undirected_edge(n + 2 * j + 1, known[j].second, 1);
      int flip_s = static_cast<int>((mask >> j) & 1u);
      int flip_t = flip_s ^ parity[j];
      if (flip_s)
        flow.add_arc(source, n + 2 * j, inf);
      else
        flow.add_arc(n + 2 * j, sink, inf);
      if (flip_t)
        flow.add_arc(source, n + 2 * j + 1, inf);
      else
        flow.add_arc(n + 2 * j + 1, sink, inf);
    }
    int cut = flow.run(source, sink);
    if (cut < best_cut) {
      best_cut = cut;
      best_side = flow.source_side(source);
    }
  }

  // Reconstruct the removed edge set from the best cut: an edge is removed
  // iff the cut separates its (possibly subdivided) endpoints.
  std::vector<Edge> removed;
  for (const auto& [u, v] : rest)
    if (best_side[u] != best_side[v]) removed.push_back(make_edge(u, v));
  for (int j = 0; j < k; ++j) {
    bool first_cut = best_side[known[j].first] != best_side[n + 2 * j];
    bool second_cut = best_side[n + 2 * j + 1] != best_side[known[j].second];
    if (first_cut || second_cut) removed.push_back(known[j]);
  }
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  return removed;
}

}  // namespace

std::optional<Bipartization> min_edge_bipartization(const Graph& g, int budget) {
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  const int n = g.vertex_count();
  std::vector<Edge> prefix;
  prefix.reserve(g.edge_count());
  std::vector<Edge> solution;  // minimum bipartization of the current prefix
  auto coloring = try_color(n, prefix);

  auto residual_of = [&](const std::vector<Edge>& removed) {
    std::vector<Edge> sorted_removed = removed;
    std::sort(sorted_removed.begin(), sorted_removed.end());
    std::vector<Edge> residual;
    for (const auto& pe : prefix)
      if (!std::binary_search(sorted_removed.begin(), sorted_removed.end(), pe))
        residual.push_back(pe);
    return residual;
  };

  for (const auto& e : g.edges()) {
    prefix.push_back(e);
    if (coloring && (*coloring)[e.first] != (*coloring)[e.second]) continue;
    // Either the stored coloring merely needs refreshing or the solution
    // must actually grow; recompute to find out.
    coloring = try_color(n, residual_of(solution));
    if (coloring) continue;
    std::vector<Edge> grown = solution;
    grown.push_back(e);
    solution = compress(n, prefix, grown);
    if (static_cast<int>(solution.size()) > budget) return std::nullopt;
    coloring = try_color(n, residual_of(solution));
    if (!coloring) throw std::logic_error("compression returned a non-bipartization");
  }

  Bipartization result;
  result.removed = std::move(solution);
  std::sort(result.removed.begin(), result.removed.end());
  result.residual_coloring = TwoColoring{std::move(*coloring)};
  return result;
}

bool is_edge_bipartization(const Graph& g, const std::vector<Edge>& removed) {
  Graph rest = delete_edges(g, removed);
  return std::holds_alternative<TwoColoring>(bipartition(rest));
}

}  // namespace paramvc
