#include "paramvc/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>

#include "paramvc/certificate.hpp"
#include "paramvc/maxflow.hpp"

namespace paramvc {

namespace {

// Fixed-width vertex mask; the branching oracles cap out at 128 vertices.
struct Mask {
  std::array<std::uint64_t, 2> w{0, 0};

  static Mask full(int n) {
    Mask m;
    if (n >= 64) {
      m.w[0] = ~0ull;
      m.w[1] = n == 128 ? ~0ull : (1ull << (n - 64)) - 1;
    } else {
      m.w[0] = n == 64 ? ~0ull : (1ull << n) - 1;
    }
    return m;
  }
  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ull; }
  int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }
  bool any() const { return w[0] | w[1]; }
  Mask and_not(const Mask& o) const { return Mask{{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
  Mask and_with(const Mask& o) const { return Mask{{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Mask or_with(const Mask& o) const { return Mask{{w[0] | o.w[0], w[1] | o.w[1]}}; }
  Mask without(int i) const {
    Mask m = *this;
    m.w[i >> 6] &= ~(1ull << (i & 63));
    return m;
  }
  template <class F>
  void for_each(F&& f) const {
    for (int part = 0; part < 2; ++part) {
      std::uint64_t x = w[part];
      while (x) {
        int bit = __builtin_ctzll(x);
        f(part * 64 + bit);
        x &= x - 1;
      }
    }
  }
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  return adj;
}

std::vector<int> mask_to_vertices(const Mask& m) {
  std::vector<int> out;
  m.for_each([&](int v) { out.push_back(v); });
  return out;
}

void require_vertex_limit(const Graph& g, int limit, const char* oracle) {
  if (g.vertex_count() > limit || g.vertex_count() > 128)
    throw OracleLimitError(std::string(oracle) + ": " + std::to_string(g.vertex_count()) +
                           " vertices exceed the limit of " +
                           std::to_string(std::min(limit, 128)));
}

void require_edge_limit(const Graph& g, int limit, const char* oracle) {
  if (g.edge_count() > limit)
    throw OracleLimitError(std::string(oracle) + ": " + std::to_string(g.edge_count()) +
                           " edges exceed the limit of " + std::to_string(limit));
}

// Size of a greedy matching among alive vertices; a lower bound on the
// vertex cover of the alive subgraph.
int matching_lower_bound(const std::vector<Mask>& adj, const Mask& alive) {
  Mask free = alive;
  int size = 0;
  alive.for_each([&](int v) {
    if (!free.test(v)) return;
    Mask candidates = adj[v].and_with(free).without(v);
    if (candidates.any()) {
      int w = candidates.w[0] ? __builtin_ctzll(candidates.w[0])
                              : 64 + __builtin_ctzll(candidates.w[1]);
      free = free.without(v).without(w);
      ++size;
    }
  });
  return size;
}

struct VcSearch {
  const std::vector<Mask>& adj;
  int best;
  Mask best_cover;
  bool found = false;

  void run(Mask alive, Mask cover, int size) {
    if (size + matching_lower_bound(adj, alive) >= best) return;
    // Pick an alive vertex of maximum alive-degree.
    int pick = -1, pick_degree = 0;
    alive.for_each([&](int v) {
      int d = adj[v].and_with(alive).count();
      if (d > pick_degree) {
        pick_degree = d;
        pick = v;
      }
    });
    if (pick < 0) {  // edgeless
      if (size < best) {
        best = size;
        best_cover = cover;
        found = true;
      }
      return;
    }
    if (pick_degree == 1) {
      // Remaining edges form a matching; take the smaller endpoint of each.
      Mask rest = alive;
      rest.for_each([&](int v) {
        if (!rest.test(v)) return;
        Mask nbr = adj[v].and_with(rest);
        if (!nbr.any()) {
          rest = rest.without(v);
          return;
        }
        int w = nbr.w[0] ? __builtin_ctzll(nbr.w[0]) : 64 + __builtin_ctzll(nbr.w[1]);
        cover.set(v);
        ++size;
        rest = rest.without(v).without(w);
      });
      if (size < best) {
        best = size;
        best_cover = cover;
        found = true;
      }
      return;
    }
    // Take pick ...
    Mask with_pick = cover;
    with_pick.set(pick);
    run(alive.without(pick), with_pick, size + 1);
    // ... or take all of its alive neighbors.
    Mask nbrs = adj[pick].and_with(alive);
    run(alive.and_not(nbrs).without(pick), cover.or_with(nbrs), size + nbrs.count());
  }
};

}  // namespace

OracleResult bf_min_vertex_cover(const Graph& g, int vertex_limit) {
  require_vertex_limit(g, vertex_limit, "bf_min_vertex_cover");
  auto adj = adjacency_masks(g);
  VcSearch search{adj, g.vertex_count() + 1, Mask{}, false};
  search.run(Mask::full(g.vertex_count()), Mask{}, 0);
  if (!search.found) throw std::logic_error("vertex cover search found nothing");
  return OracleResult{search.best, mask_to_vertices(search.best_cover)};
}

OracleResult bf_max_independent_set(const Graph& g, int vertex_limit) {
  require_vertex_limit(g, vertex_limit, "bf_max_independent_set");
  auto adj = adjacency_masks(g);
  struct IsSearch {
    const std::vector<Mask>& adj;
    int best = -1;
    Mask best_set{};

    void run(Mask alive, Mask chosen, int size) {
      if (size + alive.count() <= best) return;
      int pick = -1, pick_degree = -1;
      alive.for_each([&](int v) {
        int d = adj[v].and_with(alive).count();
        if (d > pick_degree) {
          pick_degree = d;
          pick = v;
        }
      });
      if (pick < 0 || pick_degree == 0) {  // alive is already independent
        int total = size + alive.count();
        if (total > best) {
          best = total;
          best_set = chosen.or_with(alive);
        }
        return;
      }
      Mask with = chosen;
      with.set(pick);
      run(alive.and_not(adj[pick]).without(pick), with, size + 1);
      run(alive.without(pick), chosen, size);
    }
  } search{adj};
  search.run(Mask::full(g.vertex_count()), Mask{}, 0);
  return OracleResult{search.best, mask_to_vertices(search.best_set)};
}

FeasibilityCheck capacitated_cover_feasible(const Graph& g, const std::vector<int>& capacity,
                                            const std::vector<int>& cover) {
  if (static_cast<int>(capacity.size()) != g.vertex_count())
    throw std::invalid_argument("capacity vector size mismatch");
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : cover) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("cover vertex out of range");
    in[v] = 1;
  }
  for (const auto& [u, v] : g.edges())
    if (!in[u] && !in[v]) return {};

  const int m = g.edge_count(), n = g.vertex_count();
  // Nodes: source, m edge nodes, n vertex nodes, sink.
  MaxFlow flow(m + n + 2);
  const int source = 0, sink = m + n + 1;
  std::vector<std::array<int, 2>> edge_arcs(m, {-1, -1});
  for (int j = 0; j < m; ++j) {
    flow.add_arc(source, 1 + j, 1);
    const auto& [u, v] = g.edges()[j];
    if (in[u]) edge_arcs[j][0] = flow.add_arc(1 + j, 1 + m + u, 1);
    if (in[v]) edge_arcs[j][1] = flow.add_arc(1 + j, 1 + m + v, 1);
  }
  for (int v = 0; v < n; ++v)
    if (in[v]) flow.add_arc(1 + m + v, sink, capacity[v]);
  if (flow.run(source, sink) != m) return {};

  FeasibilityCheck result;
  result.feasible = true;
  result.assignment.reserve(m);
  for (int j = 0; j < m; ++j) {
    const auto& e = g.edges()[j];
    int endpoint = (edge_arcs[j][0] >= 0 && flow.flow_on(edge_arcs[j][0]) > 0) ? e.first
                                                                               : e.second;
    result.assignment.emplace_back(e, endpoint);
  }
  return result;
}

namespace {

enum class Status : unsigned char { Undecided, In, Out };

struct CapacitatedSearch {
  const Graph& g;
  const std::vector<int>& capacity;
  std::vector<Status> status{};
  int in_count = 0;
  int best = 0;
  std::vector<int> best_cover{};
  bool found = false;

  // Forces v into the cover; returns false on contradiction. Records every
  // status change on the trail for undo.
  bool set_in(int v, std::vector<int>& trail) {
    if (status[v] == Status::In) return true;
    if (status[v] == Status::Out) return false;
    status[v] = Status::In;
    ++in_count;
    trail.push_back(v);
    return check_capacity(v);
  }

  bool set_out(int v, std::vector<int>& trail) {
    if (status[v] == Status::Out) return true;
    if (status[v] == Status::In) return false;
    status[v] = Status::Out;
    trail.push_back(~v);
    // Every incident edge now needs the other endpoint, and In neighbors
    // just picked up one more forced assignment.
    for (int w : g.neighbors(v)) {
      if (status[w] == Status::In) {
        if (!check_capacity(w)) return false;
      } else if (!set_in(w, trail)) {
        return false;
      }
    }
    return true;
  }

  // An In vertex is already infeasible once its Out neighbors alone exceed
  // its capacity.
  bool check_capacity(int v) {
    if (capacity[v] >= g.degree(v)) return true;
    int forced = 0;
    for (int w : g.neighbors(v))
      if (status[w] == Status::Out) ++forced;
    return forced <= capacity[v];
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      int entry = trail.back();
      trail.pop_back();
      if (entry >= 0) {
        status[entry] = Status::Undecided;
        --in_count;
      } else {
        status[~entry] = Status::Undecided;
      }
    }
  }

  int lower_bound() const {
    // Uncovered edges are vertex-disjoint only up to a matching; each
    // matched pair needs one more cover vertex.
    std::vector<char> used(g.vertex_count(), 0);
    int matching = 0;
    for (const auto& [u, v] : g.edges()) {
      if (status[u] == Status::In || status[v] == Status::In) continue;
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      ++matching;
    }
    // Capacity route: the cover's capacities must sum to at least m.
    long long have = 0;
    std::vector<int> caps;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (status[v] == Status::In) have += capacity[v];
      if (status[v] == Status::Undecided) caps.push_back(capacity[v]);
    }
    std::sort(caps.rbegin(), caps.rend());
    int needed = 0;
    for (std::size_t i = 0; have < g.edge_count(); ++i) {
      if (i >= caps.size()) return g.vertex_count() + 1;  // cannot reach m at all
      have += caps[i];
      ++needed;
    }
    return std::max(matching, needed);
  }

  void run(std::vector<int>& trail) {
    if (in_count + lower_bound() >= best) return;
    // Lowest uncovered edge; propagation keeps both endpoints undecided.
    for (const auto& [u, v] : g.edges()) {
      if (status[u] == Status::In || status[v] == Status::In) continue;
      branch(u, trail);
      return;
    }
    // Everything is covered; test the flow.
    std::vector<int> cover;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (status[v] == Status::In) cover.push_back(v);
    if (capacitated_cover_feasible(g, capacity, cover).feasible) {
      if (in_count < best) {
        best = in_count;
        best_cover = std::move(cover);
        found = true;
      }
      return;
    }
    // Covered but over capacity: only an undecided vertex with positive
    // capacity can absorb load.
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (status[v] == Status::Undecided && capacity[v] > 0 && g.degree(v) > 0) {
        branch(v, trail);
        return;
      }
    }
  }

  void branch(int v, std::vector<int>& trail) {
    std::size_t mark = trail.size();
    if (set_in(v, trail)) run(trail);
    undo(trail, mark);
    if (set_out(v, trail)) run(trail);
    undo(trail, mark);
  }
};

}  // namespace

std::optional<OracleResult> bf_min_capacitated_vc(const Graph& g,
                                                  const std::vector<int>& capacity,
                                                  int vertex_limit, int size_cap) {
  require_vertex_limit(g, vertex_limit, "bf_min_capacitated_vc");
  if (static_cast<int>(capacity.size()) != g.vertex_count())
    throw std::invalid_argument("capacity vector size mismatch");
  CapacitatedSearch search{g, capacity};
  search.status.assign(g.vertex_count(), Status::Undecided);
  search.best = (size_cap >= 0 ? std::min(size_cap, g.vertex_count()) : g.vertex_count()) + 1;
  std::vector<int> trail;
  search.run(trail);
  if (!search.found) return std::nullopt;
  return OracleResult{search.best, std::move(search.best_cover)};
}

OracleResult bf_min_dominating_set(const Graph& g, int vertex_limit) {
  require_vertex_limit(g, std::min(vertex_limit, 64), "bf_min_dominating_set");
  const int n = g.vertex_count();
  std::vector<std::uint64_t> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = 1ull << v;
    for (int w : g.neighbors(v)) closed[v] |= 1ull << w;
  }
  const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  std::vector<int> pick;
  // Subset enumeration in increasing size, lexicographic within a size.
  std::function<bool(int, int, std::uint64_t)> extend = [&](int from, int left,
                                                            std::uint64_t dominated) {
    if (left == 0) return dominated == all;
    for (int v = from; v <= n - left; ++v) {
      pick.push_back(v);
      if (extend(v + 1, left - 1, dominated | closed[v])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= n; ++size) {
    pick.clear();
    if (extend(0, size, 0)) return OracleResult{size, pick};
  }
  throw std::logic_error("dominating set enumeration failed");
}

std::optional<EdgeOracleResult> bf_min_edge_bipartization(const Graph& g, int edge_limit,
                                                          int size_cap) {
  require_edge_limit(g, edge_limit, "bf_min_edge_bipartization");
  const int n = g.vertex_count(), m = g.edge_count();
  // Union-find with parity for the bipartiteness test.
  std::vector<int> parent(n), rank_of(n), parity(n);
  std::vector<char> removed(m, 0);
  auto find = [&](int v, int& par) {
    par = 0;
    while (parent[v] != v) {
      par ^= parity[v];
      v = parent[v];
    }
    return v;
  };
  auto bipartite_without = [&]() {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(rank_of.begin(), rank_of.end(), 0);
    std::fill(parity.begin(), parity.end(), 0);
    for (int j = 0; j < m; ++j) {
      if (removed[j]) continue;
      const auto& [u, v] = g.edges()[j];
      int pu, pv;
      int ru = find(u, pu), rv = find(v, pv);
      if (ru == rv) {
        if (pu == pv) return false;
        continue;
      }
      if (rank_of[ru] < rank_of[rv]) {
        std::swap(ru, rv);
        std::swap(pu, pv);
      }
      parent[rv] = ru;
      parity[rv] = pu ^ pv ^ 1;
      if (rank_of[ru] == rank_of[rv]) ++rank_of[ru];
    }
    return true;
  };

  const int top = size_cap >= 0 ? std::min(size_cap, m) : m;
  std::vector<int> pick;
  std::function<bool(int, int)> extend = [&](int from, int left) {
    if (left == 0) return bipartite_without();
    for (int j = from; j <= m - left; ++j) {
      removed[j] = 1;
      pick.push_back(j);
      if (extend(j + 1, left - 1)) return true;
      pick.pop_back();
      removed[j] = 0;
    }
    return false;
  };
  for (int size = 0; size <= top; ++size) {
    pick.clear();
    std::fill(removed.begin(), removed.end(), 0);
    if (extend(0, size)) {
      EdgeOracleResult result{size, {}};
      for (int j : pick) result.witness.push_back(g.edges()[j]);
      return result;
    }
  }
  return std::nullopt;
}

EdgeOracleResult bf_max_matching(const Graph& g, int edge_limit) {
  require_edge_limit(g, edge_limit, "bf_max_matching");
  const int m = g.edge_count();
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<int> current, best_pick;
  int best = -1;
  std::function<void(int)> extend = [&](int from) {
    if (static_cast<int>(current.size()) > best) {
      best = static_cast<int>(current.size());
      best_pick = current;
    }
    if (static_cast<int>(current.size()) + (m - from) <= best) return;
    for (int j = from; j < m; ++j) {
      const auto& [u, v] = g.edges()[j];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      current.push_back(j);
      extend(j + 1);
      current.pop_back();
      used[u] = used[v] = 0;
    }
  };
  extend(0);
  EdgeOracleResult result{best, {}};
  for (int j : best_pick) result.witness.push_back(g.edges()[j]);
  return result;
}

}  // namespace paramvc
