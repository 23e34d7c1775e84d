#include "paramvc/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace paramvc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& e : edges_) e = make_edge(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& [u, v] = edges_[i];
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
    if (i > 0 && edges_[i] == edges_[i - 1])
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
  }
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

namespace {

// Walks parent pointers from u and w up to their lowest common ancestor in
// the BFS tree and stitches the odd cycle lca .. u, w .. (child of lca).
OddCycleWitness build_odd_cycle(const std::vector<int>& parent, const std::vector<int>& depth,
                                int u, int w) {
  std::vector<int> path_u{u}, path_w{w};
  int a = u, b = w;
  while (depth[a] > depth[b]) path_u.push_back(a = parent[a]);
  while (depth[b] > depth[a]) path_w.push_back(b = parent[b]);
  while (a != b) {
    path_u.push_back(a = parent[a]);
    path_w.push_back(b = parent[b]);
  }
  // path_u ends at the lca, path_w ends one short of it.
  path_w.pop_back();
  std::vector<int> cycle(path_u.rbegin(), path_u.rend());
  cycle.insert(cycle.end(), path_w.begin(), path_w.end());
  return OddCycleWitness{std::move(cycle)};
}

}  // namespace

std::variant<TwoColoring, OddCycleWitness> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Side> side(n, Side::Left);
  std::vector<int> parent(n, -1), depth(n, -1);
  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    side[root] = Side::Left;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          side[w] = side[v] == Side::Left ? Side::Right : Side::Left;
          queue.push(w);
        } else if (side[w] == side[v]) {
          return build_odd_cycle(parent, depth, v, w);
        }
      }
    }
  }
  return TwoColoring{std::move(side)};
}

bool is_valid_two_coloring(const Graph& g, const TwoColoring& coloring) {
  if (static_cast<int>(coloring.side.size()) != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges())
    if (coloring.side[u] == coloring.side[v]) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> components;
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> component;
    std::queue<int> queue;
    seen[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      component.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

ComponentClass classify_component(const Graph& g, const std::vector<int>& component,
                                  int degree_bound) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > degree_bound)
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " has degree " +
                                  std::to_string(g.degree(v)) + " exceeding bound " +
                                  std::to_string(degree_bound));
  const int size = static_cast<int>(component.size());
  if (size == 0) throw std::invalid_argument("empty component");
  std::vector<char> inside(g.vertex_count(), 0);
  for (int v : component) inside[v] = 1;
  for (int v : component)
    for (int w : g.neighbors(v))
      if (!inside[w]) throw std::invalid_argument("vertex set is not a connected component");

  if (size == degree_bound + 1) {
    bool complete = true;
    for (int v : component)
      if (g.degree(v) != degree_bound) complete = false;
    if (complete) return ComponentClass::CompleteBPlusOne;
  }
  if (degree_bound == 2 && size % 2 == 1 && size >= 3) {
    bool cycle = true;
    for (int v : component)
      if (g.degree(v) != 2) cycle = false;
    if (cycle) return ComponentClass::OddCycle;
  }
  return ComponentClass::Other;
}

std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order must be a permutation of the vertex set");
  std::vector<char> present(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || present[v])
      throw std::invalid_argument("order must be a permutation of the vertex set");
    present[v] = 1;
  }
  std::vector<int> color(n, -1);
  std::vector<char> used(n + 1, 0);
  for (int v : order) {
    for (int w : g.neighbors(v))
      if (color[w] >= 0) used[color[w]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    for (int w : g.neighbors(v))
      if (color[w] >= 0) used[color[w]] = 0;
  }
  return color;
}

InducedSubgraph edge_induced_subgraph(const Graph& g, const std::vector<Edge>& edge_set) {
  std::vector<int> vertices;
  for (const auto& [u, v] : edge_set) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is not in the graph");
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> to_new(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) to_new[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  edges.reserve(edge_set.size());
  for (const auto& [u, v] : edge_set) edges.push_back(make_edge(to_new[u], to_new[v]));
  return InducedSubgraph{Graph(static_cast<int>(vertices.size()), std::move(edges)),
                         std::move(vertices)};
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : removed) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  std::vector<int> to_new(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) to_new[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (!gone[u] && !gone[v]) edges.push_back(make_edge(to_new[u], to_new[v]));
  return InducedSubgraph{Graph(static_cast<int>(keep.size()), std::move(edges)),
                         std::move(keep)};
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& removed) {
  std::vector<Edge> gone;
  gone.reserve(removed.size());
  for (const auto& [u, v] : removed) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is not in the graph");
    gone.push_back(make_edge(u, v));
  }
  std::sort(gone.begin(), gone.end());
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges())
    if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
  return Graph(g.vertex_count(), std::move(kept));
}

}  // namespace paramvc
