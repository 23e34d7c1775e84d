#include "paramvc/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace paramvc {

Json vertices_to_json(const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (int v : sorted) out.push_back(v + 1);
  return out;
}

std::vector<int> vertices_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of vertex ids");
  std::vector<int> vertices;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw std::invalid_argument("vertex ids must be integers");
    int v = item.get<int>();
    if (v < 1) throw std::invalid_argument("vertex ids are 1-based");
    vertices.push_back(v - 1);
  }
  return vertices;
}

Json edges_to_json(const std::vector<Edge>& edges) {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& [u, v] : sorted) out.push_back(Json::array({u + 1, v + 1}));
  return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of edges");
  std::vector<Edge> edges;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("each edge must be a [u, v] pair");
    int u = item[0].get<int>(), v = item[1].get<int>();
    if (u < 1 || v < 1) throw std::invalid_argument("vertex ids are 1-based");
    edges.push_back(make_edge(u - 1, v - 1));
  }
  return edges;
}

Json matching_to_json(const Matching& m) { return edges_to_json(m.pairs); }

Matching matching_from_json(const Json& j) {
  Matching m;
  m.pairs = edges_from_json(j);
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["n"] = g.vertex_count();
  out["edges"] = edges_to_json(g.edges());
  return out;
}

Graph graph_from_json(const Json& j) {
  return Graph(j.at("n").get<int>(), edges_from_json(j.at("edges")));
}

Json certificate_to_json(const std::string& problem, bool answer, const CoverCertificate& cert,
                         long long threshold_num, long long threshold_den) {
  Json out;
  out["problem"] = problem;
  out["answer"] = answer;
  out["cover"] = vertices_to_json(cert.vertices);
  out["threshold_num"] = threshold_num;
  out["threshold_den"] = threshold_den;
  if (cert.assignment) {
    Json assignment = Json::array();
    std::vector<std::pair<Edge, int>> sorted = *cert.assignment;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [e, to] : sorted)
      assignment.push_back(Json::array({e.first + 1, e.second + 1, to + 1}));
    out["assignment"] = std::move(assignment);
  }
  return out;
}

Json bipartization_to_json(const std::optional<Bipartization>& bip) {
  Json out;
  if (!bip) {
    out["feasible"] = false;
    return out;
  }
  out["size"] = static_cast<int>(bip->removed.size());
  out["edges"] = edges_to_json(bip->removed);
  return out;
}

Json oracle_result_to_json(const OracleResult& result) {
  Json out;
  out["optimum"] = result.optimum;
  out["witness"] = vertices_to_json(result.witness);
  return out;
}

Json oracle_result_to_json(const EdgeOracleResult& result) {
  Json out;
  out["optimum"] = result.optimum;
  out["witness"] = edges_to_json(result.witness);
  return out;
}

Json reduction_to_json(const ReductionOutput& out) {
  Json j;
  j["kind"] = to_string(out.kind);
  Json params;
  params["source_n"] = out.params.source_n;
  params["source_m"] = out.params.source_m;
  params["k"] = out.params.k;
  params["source_B"] = out.params.source_bound;
  params["target_n"] = out.params.target_n;
  params["target_m"] = out.params.target_m;
  params["target_B"] = out.params.target_bound;
  params["target_cover_size"] = out.params.target_cover_size;
  if (out.kind == ReductionKind::Vcu2) params["matching_size"] = out.params.matching_size;
  j["params"] = std::move(params);
  j["source"] = graph_to_json(out.source);
  Json instance = graph_to_json(out.graph);
  if (out.kind == ReductionKind::Cvcl1) {
    Json caps = Json::array();
    for (int c : out.capacities) caps.push_back(c);
    instance["capacities"] = std::move(caps);
  }
  if (out.kind == ReductionKind::Vcu2) instance["matching"] = matching_to_json(out.matching);
  j["instance"] = std::move(instance);
  Json roles;
  for (std::size_t v = 0; v < out.vertex_roles.size(); ++v)
    roles[std::to_string(v + 1)] = out.vertex_roles[v];
  j["vertex_map"] = std::move(roles);
  return j;
}

ReductionOutput reduction_from_json(const Json& j) {
  // Rebuilding through the constructor revalidates the structural formulas
  // and regenerates capacities, matching and roles deterministically.
  ReductionKind kind = reduction_kind_from_string(j.at("kind").get<std::string>());
  Graph source = graph_from_json(j.at("source"));
  int k = j.at("params").at("k").get<int>();
  ReductionOutput rebuilt;
  switch (kind) {
    case ReductionKind::Cvcl1: rebuilt = reduce_ds_to_cvcl1(source, k); break;
    case ReductionKind::Vcu2: rebuilt = reduce_is_to_vcu2(source, k); break;
    case ReductionKind::Vcu1Unbounded: rebuilt = reduce_vc_to_unbounded_vcu1(source, k); break;
  }
  Graph stored = graph_from_json(j.at("instance"));
  if (stored.vertex_count() != rebuilt.graph.vertex_count() ||
      stored.edges() != rebuilt.graph.edges())
    throw std::invalid_argument("sidecar instance does not match its source and kind");
  return rebuilt;
}

std::vector<int> solution_vertices_from_json(const Json& j) {
  if (j.is_array()) return vertices_from_json(j);
  if (j.is_object()) {
    if (j.contains("vertices")) return vertices_from_json(j.at("vertices"));
    if (j.contains("cover")) return vertices_from_json(j.at("cover"));
    if (j.contains("witness")) return vertices_from_json(j.at("witness"));
  }
  throw std::invalid_argument("expected a vertex array or an object with vertices/cover");
}

std::vector<Edge> solution_edges_from_json(const Json& j) {
  if (j.is_array()) return edges_from_json(j);
  if (j.is_object()) {
    if (j.contains("edges")) return edges_from_json(j.at("edges"));
    if (j.contains("pairs")) return edges_from_json(j.at("pairs"));
    if (j.contains("witness")) return edges_from_json(j.at("witness"));
  }
  throw std::invalid_argument("expected an edge array or an object with edges/pairs");
}

}  // namespace paramvc
