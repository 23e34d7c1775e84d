#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paramvc/certificate.hpp"
#include "paramvc/edge_bipartization.hpp"
#include "paramvc/graph.hpp"
#include "paramvc/matching.hpp"
#include "paramvc/oracles.hpp"
#include "paramvc/reductions.hpp"

namespace paramvc {

// All JSON carries 1-based vertex ids and insertion-ordered keys so that
// identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json vertices_to_json(const std::vector<int>& vertices);
std::vector<int> vertices_from_json(const Json& j);

Json edges_to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const Json& j);

Json matching_to_json(const Matching& m);
Matching matching_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"problem": ..., "answer": ..., "cover": [...], "threshold_num": ...,
//  "threshold_den": ...}
Json certificate_to_json(const std::string& problem, bool answer, const CoverCertificate& cert,
                         long long threshold_num, long long threshold_den);

// {"size": s, "edges": [[u,v],...]} or {"feasible": false}
Json bipartization_to_json(const std::optional<Bipartization>& bip);

Json oracle_result_to_json(const OracleResult& result);
Json oracle_result_to_json(const EdgeOracleResult& result);

Json reduction_to_json(const ReductionOutput& out);
ReductionOutput reduction_from_json(const Json& j);

// Accepts {"vertices": [...]}, {"cover": [...]}, or a bare array.
std::vector<int> solution_vertices_from_json(const Json& j);
// Accepts {"edges": [...]}, {"pairs": [...]}, or a bare array of pairs.
std::vector<Edge> solution_edges_from_json(const Json& j);

}  // namespace paramvc
