#include "paramvc/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace paramvc {

namespace {

void require_valid_coloring(const Graph& g, const TwoColoring& coloring) {
  if (!is_valid_two_coloring(g, coloring))
    throw std::invalid_argument("invalid two-coloring for this graph");
}

bool try_augment(const Graph& g, const TwoColoring& coloring, int u, std::vector<int>& mate,
                 std::vector<char>& visited) {
  for (int w : g.neighbors(u)) {
    if (visited[w]) continue;
    visited[w] = 1;
    if (mate[w] < 0 || try_augment(g, coloring, mate[w], mate, visited)) {
      mate[w] = u;
      mate[u] = w;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_bipartite_matching(const Graph& g, const TwoColoring& coloring) {
  require_valid_coloring(g, coloring);
  const int n = g.vertex_count();
  std::vector<int> mate(n, -1);
  std::vector<char> visited(n, 0);
  for (int u = 0; u < n; ++u) {
    if (coloring.side[u] != Side::Left || mate[u] >= 0) continue;
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(g, coloring, u, mate, visited);
  }
  Matching result;
  for (int u = 0; u < n; ++u)
    if (coloring.side[u] == Side::Left && mate[u] >= 0)
      result.pairs.push_back(make_edge(u, mate[u]));
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

std::vector<int> min_vc_bipartite(const Graph& g, const TwoColoring& coloring) {
  require_valid_coloring(g, coloring);
  const int n = g.vertex_count();
  Matching matching = max_bipartite_matching(g, coloring);
  std::vector<int> mate(n, -1);
  for (const auto& [a, b] : matching.pairs) {
    mate[a] = b;
    mate[b] = a;
  }
  // Alternating reachability from unmatched left vertices: non-matching
  // edges left -> right, matching edges right -> left.
  std::vector<char> reached(n, 0);
  std::vector<int> stack;
  for (int u = 0; u < n; ++u)
    if (coloring.side[u] == Side::Left && mate[u] < 0) {
      reached[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (coloring.side[v] == Side::Left) {
      for (int w : g.neighbors(v))
        if (mate[v] != w && !reached[w]) {
          reached[w] = 1;
          stack.push_back(w);
        }
    } else if (mate[v] >= 0 && !reached[mate[v]]) {
      reached[mate[v]] = 1;
      stack.push_back(mate[v]);
    }
  }
  std::vector<int> cover;
  for (int v = 0; v < n; ++v) {
    bool left = coloring.side[v] == Side::Left;
    if ((left && !reached[v]) || (!left && reached[v])) cover.push_back(v);
  }
  return cover;
}

Matching greedy_maximal_matching(const Graph& g) { return greedy_maximal_matching(g, g.edges()); }

Matching greedy_maximal_matching(const Graph& g, const std::vector<Edge>& order) {
  std::vector<char> matched(g.vertex_count(), 0);
  Matching result;
  for (const auto& [u, v] : order) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is not in the graph");
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = 1;
      result.pairs.push_back(make_edge(u, v));
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> matched(g.vertex_count(), 0);
  for (const auto& [u, v] : m.pairs) {
    if (!g.has_edge(u, v)) return false;
    if (matched[u] || matched[v]) return false;
    matched[u] = matched[v] = 1;
  }
  return true;
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  if (!is_matching(g, m)) throw std::invalid_argument("not a matching of this graph");
  std::vector<char> matched(g.vertex_count(), 0);
  for (const auto& [u, v] : m.pairs) matched[u] = matched[v] = 1;
  for (const auto& [u, v] : g.edges())
    if (!matched[u] && !matched[v]) return false;
  return true;
}

}  // namespace paramvc
