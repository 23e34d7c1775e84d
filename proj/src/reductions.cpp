#include "paramvc/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "paramvc/oracles.hpp"

namespace paramvc {

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Cvcl1: return "cvcl1";
    case ReductionKind::Vcu2: return "vcu2";
    case ReductionKind::Vcu1Unbounded: return "vcu1-unbounded";
  }
  throw std::logic_error("unknown reduction kind");
}

ReductionKind reduction_kind_from_string(const std::string& name) {
  if (name == "cvcl1") return ReductionKind::Cvcl1;
  if (name == "vcu2") return ReductionKind::Vcu2;
  if (name == "vcu1-unbounded") return ReductionKind::Vcu1Unbounded;
  throw std::invalid_argument("unknown reduction kind '" + name + "'");
}

CapacitatedInstance ReductionOutput::as_capacitated() const {
  if (kind != ReductionKind::Cvcl1)
    throw std::logic_error("only the cvcl1 reduction is capacitated");
  return CapacitatedInstance{graph, capacities, params.target_bound,
                             params.target_cover_size};
}

namespace {

// Constructed-vertex bookkeeping for the capacitated reduction.
struct Cvcl1Layout {
  std::vector<int> small_base;  // B+1 small-side vertices per source vertex
  std::vector<int> large_base;  // B+2 large-side vertices
  std::vector<int> dom;         // domination vertex
  std::vector<int> leaf_base;   // B - d(v) + 1 leaves
  std::vector<int> leaf_count;
};

Cvcl1Layout cvcl1_layout(const Graph& g, int bound) {
  Cvcl1Layout layout;
  const int n = g.vertex_count();
  layout.small_base.resize(n);
  layout.large_base.resize(n);
  layout.dom.resize(n);
  layout.leaf_base.resize(n);
  layout.leaf_count.resize(n);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    layout.small_base[v] = next;
    next += bound + 1;
    layout.large_base[v] = next;
    next += bound + 2;
    layout.dom[v] = next++;
    layout.leaf_base[v] = next;
    layout.leaf_count[v] = bound - g.degree(v) + 1;
    next += layout.leaf_count[v];
  }
  return layout;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  std::vector<int> closed{v};
  for (int w : g.neighbors(v)) closed.push_back(w);
  std::sort(closed.begin(), closed.end());
  return closed;
}

void require_source_vertices(const Graph& g, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool is_dominating(const Graph& g, const std::vector<int>& set) {
  std::vector<char> dominated(g.vertex_count(), 0);
  for (int v : set) {
    dominated[v] = 1;
    for (int w : g.neighbors(v)) dominated[w] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!dominated[v]) return false;
  return true;
}

}  // namespace

ReductionOutput reduce_ds_to_cvcl1(const Graph& g, int k) {
  const int n = g.vertex_count();
  const int bound = max_degree(g);
  if (bound < 1) throw std::invalid_argument("source graph needs at least one edge");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");

  Cvcl1Layout layout = cvcl1_layout(g, bound);
  const int target_n = layout.leaf_base[n - 1] + layout.leaf_count[n - 1];
  std::vector<Edge> edges;
  std::vector<std::string> roles(target_n);
  for (int v = 0; v < n; ++v) {
    const std::string tag = std::to_string(v + 1);
    for (int i = 0; i <= bound; ++i)
      roles[layout.small_base[v] + i] = "choice[" + tag + "][small][" + std::to_string(i) + "]";
    for (int i = 0; i <= bound + 1; ++i)
      roles[layout.large_base[v] + i] = "choice[" + tag + "][large][" + std::to_string(i) + "]";
    roles[layout.dom[v]] = "dom[" + tag + "]";
    for (int j = 0; j < layout.leaf_count[v]; ++j)
      roles[layout.leaf_base[v] + j] = "leaf[" + tag + "][" + std::to_string(j) + "]";

    for (int i = 0; i <= bound; ++i)
      for (int j = 0; j <= bound + 1; ++j)
        edges.push_back(make_edge(layout.small_base[v] + i, layout.large_base[v] + j));
    for (int j = 0; j < layout.leaf_count[v]; ++j)
      edges.push_back(make_edge(layout.dom[v], layout.leaf_base[v] + j));
    // One connector per closed-neighborhood member, ascending member id to
    // ascending large-side index.
    std::vector<int> closed = closed_neighborhood(g, v);
    for (std::size_t i = 0; i < closed.size(); ++i)
      edges.push_back(make_edge(layout.large_base[v] + static_cast<int>(i),
                                layout.dom[closed[i]]));
  }

  ReductionOutput out;
  out.kind = ReductionKind::Cvcl1;
  out.source = g;
  out.graph = Graph(target_n, std::move(edges));
  out.capacities.resize(target_n);
  for (int v = 0; v < target_n; ++v) out.capacities[v] = out.graph.degree(v);
  for (int v = 0; v < n; ++v) out.capacities[layout.dom[v]] = bound + 1;
  out.vertex_roles = std::move(roles);
  out.params = {n,
                g.edge_count(),
                k,
                bound,
                target_n,
                out.graph.edge_count(),
                max_degree(out.graph),
                static_cast<long long>(n) * (bound + 2) + k,
                0};

  const long long expected_edges = static_cast<long long>(n) * (bound + 2) * (bound + 2);
  if (out.params.target_m != expected_edges)
    throw std::logic_error("constructed edge count is not n(B+2)^2");
  if (out.params.target_bound != bound + 2)
    throw std::logic_error("constructed max degree is not B+2");
  for (int v = 0; v < n; ++v)
    if (out.graph.degree(layout.dom[v]) != bound + 2)
      throw std::logic_error("domination vertex degree is not B+2");
  return out;
}

CoverCertificate map_ds_forward(const ReductionOutput& out, const std::vector<int>& dominating) {
  if (out.kind != ReductionKind::Cvcl1) throw std::invalid_argument("wrong reduction kind");
  const Graph& g = out.source;
  require_source_vertices(g, dominating);
  if (!is_dominating(g, dominating))
    throw std::invalid_argument("the given set is not dominating");
  if (static_cast<long long>(dominating.size()) > out.params.k)
    throw std::invalid_argument("dominating set larger than k");

  const int bound = out.params.source_bound;
  Cvcl1Layout layout = cvcl1_layout(g, bound);
  std::vector<char> in_set(g.vertex_count(), 0);
  for (int v : dominating) in_set[v] = 1;

  std::vector<int> cover;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_set[v])
      for (int i = 0; i <= bound + 1; ++i) cover.push_back(layout.large_base[v] + i);
    else
      for (int i = 0; i <= bound; ++i) cover.push_back(layout.small_base[v] + i);
    cover.push_back(layout.dom[v]);
  }

  // Edge assignment: gadget edges to the chosen side, leaf edges to the
  // domination vertex, connectors to the large side when it was chosen.
  std::vector<char> in_cover(out.graph.vertex_count(), 0);
  for (int v : cover) in_cover[v] = 1;
  std::vector<std::pair<Edge, int>> assignment;
  std::vector<int> dom_load(g.vertex_count(), 0);
  std::vector<char> is_dom(out.graph.vertex_count(), 0);
  std::vector<int> dom_owner(out.graph.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    is_dom[layout.dom[v]] = 1;
    dom_owner[layout.dom[v]] = v;
  }
  for (const auto& e : out.graph.edges()) {
    int to;
    if (is_dom[e.first] || is_dom[e.second]) {
      int dom_end = is_dom[e.first] ? e.first : e.second;
      int other = dom_end == e.first ? e.second : e.first;
      if (in_cover[other]) {
        to = other;
      } else {
        to = dom_end;
        ++dom_load[dom_owner[dom_end]];
      }
    } else {
      to = in_cover[e.first] ? e.first : e.second;
    }
    assignment.emplace_back(e, to);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dom_load[v] > bound + 1)
      throw std::logic_error("domination vertex over capacity in the forward map");

  auto cert = make_cover_certificate(std::move(cover));
  if (cert.claimed_size != static_cast<long long>(g.vertex_count()) * (bound + 2) +
                               static_cast<long long>(dominating.size()))
    throw std::logic_error("forward cover size is not n(B+2) + |D|");
  if (!covers_all_edges(out.graph, cert.vertices))
    throw std::logic_error("forward map missed an edge");
  cert.assignment = std::move(assignment);
  return cert;
}

std::vector<int> map_cvcl1_back(const ReductionOutput& out, const std::vector<int>& cover) {
  if (out.kind != ReductionKind::Cvcl1) throw std::invalid_argument("wrong reduction kind");
  if (static_cast<long long>(cover.size()) > out.params.target_cover_size)
    throw std::invalid_argument("cover exceeds the target size");
  if (!capacitated_cover_feasible(out.graph, out.capacities, cover).feasible)
    throw std::invalid_argument("not a capacitated vertex cover of the constructed instance");

  const Graph& g = out.source;
  const int bound = out.params.source_bound;
  Cvcl1Layout layout = cvcl1_layout(g, bound);
  std::vector<char> in(out.graph.vertex_count(), 0);
  for (int v : cover) in[v] = 1;

  // Leaves out, domination vertices in; if a domination vertex has no
  // selected choice-gadget neighbor, trade a leaf for one.
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> leaves_in;
    for (int j = 0; j < layout.leaf_count[v]; ++j)
      if (in[layout.leaf_base[v] + j]) leaves_in.push_back(layout.leaf_base[v] + j);
    if (!in[layout.dom[v]]) {
      for (int leaf : leaves_in) in[leaf] = 0;
      in[layout.dom[v]] = 1;
      continue;
    }
    if (leaves_in.empty()) continue;
    bool has_partner = false;
    int lowest_partner = -1;
    for (int w : out.graph.neighbors(layout.dom[v])) {
      if (w >= layout.leaf_base[v] && w < layout.leaf_base[v] + layout.leaf_count[v]) continue;
      if (lowest_partner < 0) lowest_partner = w;
      if (in[w]) has_partner = true;
    }
    if (!has_partner && lowest_partner >= 0) in[lowest_partner] = 1;
    for (int leaf : leaves_in) in[leaf] = 0;
  }

  // Snap each choice gadget to one full side.
  std::vector<int> result;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool any_large = false;
    for (int i = 0; i <= bound + 1; ++i)
      if (in[layout.large_base[v] + i]) any_large = true;
    if (any_large) {
      for (int i = 0; i <= bound; ++i) in[layout.small_base[v] + i] = 0;
      for (int i = 0; i <= bound + 1; ++i) in[layout.large_base[v] + i] = 1;
      result.push_back(v);
    } else {
      for (int i = 0; i <= bound; ++i)
        if (!in[layout.small_base[v] + i])
          throw std::logic_error("choice gadget covered by neither side");
    }
  }

  if (!is_dominating(g, result))
    throw std::logic_error("normalized cover does not induce a dominating set");
  if (static_cast<long long>(result.size()) > out.params.k)
    throw std::logic_error("extracted dominating set exceeds k");
  return result;
}

namespace {

struct Vcu2Layout {
  int n = 0, m = 0;
  int path(int u, int which) const { return 3 * u + which - 1; }  // which in 1..3
  int gadget(int edge_index, int slot) const { return 3 * n + 4 * edge_index + slot; }
  // slot: 0 = e_u, 1 = e_v, 2 = e_w, 3 = e_z
};

}  // namespace

ReductionOutput reduce_is_to_vcu2(const Graph& g, int k) {
  const int n = g.vertex_count(), m = g.edge_count();
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Vcu2Layout layout{n, m};

  std::vector<Edge> edges;
  std::vector<std::string> roles(3 * n + 4 * m);
  Matching prescribed;
  for (int u = 0; u < n; ++u) {
    const std::string tag = std::to_string(u + 1);
    for (int which = 1; which <= 3; ++which)
      roles[layout.path(u, which)] = "path[" + tag + "][" + std::to_string(which) + "]";
    edges.push_back(make_edge(layout.path(u, 1), layout.path(u, 2)));
    edges.push_back(make_edge(layout.path(u, 2), layout.path(u, 3)));
    prescribed.pairs.push_back(make_edge(layout.path(u, 2), layout.path(u, 3)));
  }
  for (int j = 0; j < m; ++j) {
    const auto& [u, v] = g.edges()[j];
    const std::string tag = std::to_string(u + 1) + "," + std::to_string(v + 1);
    const char* slot_names[4] = {"u", "v", "w", "z"};
    for (int slot = 0; slot < 4; ++slot)
      roles[layout.gadget(j, slot)] = "gadget[" + tag + "][" + slot_names[slot] + "]";
    edges.push_back(make_edge(layout.gadget(j, 0), layout.gadget(j, 1)));
    edges.push_back(make_edge(layout.gadget(j, 1), layout.gadget(j, 2)));
    edges.push_back(make_edge(layout.gadget(j, 2), layout.gadget(j, 0)));
    edges.push_back(make_edge(layout.gadget(j, 2), layout.gadget(j, 3)));
    edges.push_back(make_edge(layout.path(u, 3), layout.gadget(j, 0)));
    edges.push_back(make_edge(layout.path(v, 3), layout.gadget(j, 1)));
    prescribed.pairs.push_back(make_edge(layout.gadget(j, 0), layout.gadget(j, 2)));
  }
  std::sort(prescribed.pairs.begin(), prescribed.pairs.end());

  ReductionOutput out;
  out.kind = ReductionKind::Vcu2;
  out.source = g;
  out.graph = Graph(3 * n + 4 * m, std::move(edges));
  out.matching = std::move(prescribed);
  out.vertex_roles = std::move(roles);
  out.params = {n,
                m,
                k,
                max_degree(g),
                3 * n + 4 * m,
                out.graph.edge_count(),
                max_degree(out.graph),
                2LL * (n + m) - k,
                n + m};

  if (out.matching.size() != n + m) throw std::logic_error("prescribed matching is not n+m");
  if (!is_maximal_matching(out.graph, out.matching))
    throw std::logic_error("prescribed matching is not maximal");
  if (out.graph.edge_count() != 2 * n + 6 * m)
    throw std::logic_error("constructed edge count is not 2n+6m");
  return out;
}

CoverCertificate map_is_forward(const ReductionOutput& out, const std::vector<int>& cover) {
  if (out.kind != ReductionKind::Vcu2) throw std::invalid_argument("wrong reduction kind");
  const Graph& g = out.source;
  require_source_vertices(g, cover);
  if (first_uncovered_edge(g, cover))
    throw std::invalid_argument("the given set is not a vertex cover of the source");
  const int n = g.vertex_count(), m = g.edge_count();
  if (static_cast<long long>(cover.size()) > n - out.params.k)
    throw std::invalid_argument("cover larger than n - k");

  Vcu2Layout layout{n, m};
  std::vector<char> in(n, 0);
  for (int v : cover) in[v] = 1;
  // All path middles, all gadget hubs, u3 for covered u, and per edge one
  // gadget endpoint on the uncovered side (e_u when both ends are covered).
  std::vector<int> picked;
  for (int u = 0; u < n; ++u) {
    picked.push_back(layout.path(u, 2));
    if (in[u]) picked.push_back(layout.path(u, 3));
  }
  for (int j = 0; j < m; ++j) {
    const auto& [u, v] = g.edges()[j];
    picked.push_back(layout.gadget(j, 2));
    if (in[u] && in[v])
      picked.push_back(layout.gadget(j, 0));
    else if (in[u])
      picked.push_back(layout.gadget(j, 1));
    else
      picked.push_back(layout.gadget(j, 0));
  }

  auto cert = make_cover_certificate(std::move(picked));
  if (cert.claimed_size != n + 2 * m + static_cast<int>(cover.size()))
    throw std::logic_error("forward cover size is not n + 2m + |C|");
  if (!covers_all_edges(out.graph, cert.vertices))
    throw std::logic_error("forward map missed an edge");
  return cert;
}

std::vector<int> map_vcu2_back(const ReductionOutput& out, const std::vector<int>& cover) {
  if (out.kind != ReductionKind::Vcu2) throw std::invalid_argument("wrong reduction kind");
  if (static_cast<long long>(cover.size()) > out.params.target_cover_size)
    throw std::invalid_argument("cover exceeds the target size");
  if (first_uncovered_edge(out.graph, cover))
    throw std::invalid_argument("not a vertex cover of the constructed instance");

  const Graph& g = out.source;
  const int n = g.vertex_count(), m = g.edge_count();
  Vcu2Layout layout{n, m};
  std::vector<char> in(out.graph.vertex_count(), 0);
  for (int v : cover) in[v] = 1;

  // Degree-1 vertices swap for their neighbors.
  for (int u = 0; u < n; ++u) {
    if (in[layout.path(u, 1)]) {
      in[layout.path(u, 1)] = 0;
      in[layout.path(u, 2)] = 1;
    }
    if (!in[layout.path(u, 2)]) throw std::logic_error("path middle vertex uncovered");
  }
  for (int j = 0; j < m; ++j) {
    if (in[layout.gadget(j, 3)]) {
      in[layout.gadget(j, 3)] = 0;
      in[layout.gadget(j, 2)] = 1;
    }
    if (!in[layout.gadget(j, 2)]) throw std::logic_error("gadget hub vertex uncovered");
  }
  // Keep exactly one of e_u, e_v per gadget: a doubled pair trades e_u for u3.
  for (int j = 0; j < m; ++j) {
    const auto& [u, v] = g.edges()[j];
    (void)v;
    if (in[layout.gadget(j, 0)] && in[layout.gadget(j, 1)]) {
      in[layout.gadget(j, 0)] = 0;
      in[layout.path(u, 3)] = 1;
    }
    if (!in[layout.gadget(j, 0)] && !in[layout.gadget(j, 1)])
      throw std::logic_error("gadget pair edge uncovered");
  }

  std::vector<int> result;
  for (int u = 0; u < n; ++u)
    if (in[layout.path(u, 3)]) result.push_back(u);
  if (first_uncovered_edge(g, result))
    throw std::logic_error("extracted set is not a vertex cover of the source");
  if (static_cast<long long>(result.size()) > n - out.params.k)
    throw std::logic_error("extracted cover exceeds n - k");
  return result;
}

ReductionOutput reduce_vc_to_unbounded_vcu1(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (g.edge_count() < 1) throw std::invalid_argument("source graph needs at least one edge");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");

  std::vector<Edge> edges = g.edges();
  const int x = n, y = n + 1;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, x));
  edges.push_back(make_edge(x, y));

  ReductionOutput out;
  out.kind = ReductionKind::Vcu1Unbounded;
  out.source = g;
  out.graph = Graph(n + 2, std::move(edges));
  out.vertex_roles.resize(n + 2);
  for (int v = 0; v < n; ++v) out.vertex_roles[v] = "src[" + std::to_string(v + 1) + "]";
  out.vertex_roles[x] = "x";
  out.vertex_roles[y] = "y";
  out.params = {n,
                g.edge_count(),
                k,
                max_degree(g),
                n + 2,
                out.graph.edge_count(),
                max_degree(out.graph),
                static_cast<long long>(n) + 1 - k,
                0};

  if (out.params.target_bound != n + 1)
    throw std::logic_error("constructed max degree is not N-1");
  return out;
}

CoverCertificate map_unbounded_forward(const ReductionOutput& out,
                                       const std::vector<int>& cover) {
  if (out.kind != ReductionKind::Vcu1Unbounded) throw std::invalid_argument("wrong reduction kind");
  const Graph& g = out.source;
  require_source_vertices(g, cover);
  if (first_uncovered_edge(g, cover))
    throw std::invalid_argument("the given set is not a vertex cover of the source");
  if (static_cast<long long>(cover.size()) > g.vertex_count() - out.params.k)
    throw std::invalid_argument("cover larger than n - k");
  std::vector<int> picked = cover;
  picked.push_back(g.vertex_count());  // x
  auto cert = make_cover_certificate(std::move(picked));
  if (!covers_all_edges(out.graph, cert.vertices))
    throw std::logic_error("forward map missed an edge");
  return cert;
}

std::vector<int> map_unbounded_back(const ReductionOutput& out, const std::vector<int>& cover) {
  if (out.kind != ReductionKind::Vcu1Unbounded) throw std::invalid_argument("wrong reduction kind");
  if (static_cast<long long>(cover.size()) > out.params.target_cover_size)
    throw std::invalid_argument("cover exceeds the target size");
  if (first_uncovered_edge(out.graph, cover))
    throw std::invalid_argument("not a vertex cover of the constructed instance");
  const int n = out.source.vertex_count();
  std::vector<int> result;
  for (int v : cover)
    if (v < n) result.push_back(v);
  if (first_uncovered_edge(out.source, result))
    throw std::logic_error("extracted set is not a vertex cover of the source");
  if (static_cast<long long>(result.size()) > n - out.params.k)
    throw std::logic_error("extracted cover exceeds n - k");
  return result;
}

}  // namespace paramvc
