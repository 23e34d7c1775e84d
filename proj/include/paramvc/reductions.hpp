#pragma once

#include <string>
#include <vector>

#include "paramvc/certificate.hpp"
#include "paramvc/graph.hpp"
#include "paramvc/matching.hpp"

namespace paramvc {

enum class ReductionKind { Cvcl1, Vcu2, Vcu1Unbounded };

std::string to_string(ReductionKind kind);
ReductionKind reduction_kind_from_string(const std::string& name);

// Graph with per-vertex capacities and a target cover size; the capacitated
// reduction materializes into this shape.
struct CapacitatedInstance {
  Graph graph;
  std::vector<int> capacity;
  int degree_bound = 0;
  long long target = 0;
};

struct ReductionParams {
  int source_n = 0;
  int source_m = 0;
  int k = 0;
  int source_bound = 0;  // max degree of the source graph
  int target_n = 0;
  long long target_m = 0;
  int target_bound = 0;
  long long target_cover_size = 0;
  int matching_size = 0;  // vcu2 only
};

// A constructed instance together with everything needed to translate
// solutions in both directions: the source graph, the constructed graph
// plus its capacities or prescribed matching, a role name per constructed
// vertex, and the parameter bookkeeping.
struct ReductionOutput {
  ReductionKind kind = ReductionKind::Cvcl1;
  Graph source;
  Graph graph;
  std::vector<int> capacities;            // cvcl1 only, else empty
  Matching matching;                      // vcu2 only, else empty
  std::vector<std::string> vertex_roles;  // constructed id -> role
  ReductionParams params;

  // The constructed instance in capacitated form (cvcl1 outputs only).
  CapacitatedInstance as_capacitated() const;
};

// Dominating set -> capacitated vertex cover above m/B. Per source vertex:
// a complete bipartite K_{B+1,B+2} choice gadget, a domination vertex with
// B - d(v) + 1 leaves and capacity B + 1, and one connector per member of
// the closed neighborhood. |E'| = n(B+2)^2, max degree B+2,
// target = n(B+2) + k.
ReductionOutput reduce_ds_to_cvcl1(const Graph& g, int k);

// Dominating set of size <= k to a capacitated cover of exactly the target
// size, including a capacity-respecting edge assignment.
CoverCertificate map_ds_forward(const ReductionOutput& out, const std::vector<int>& dominating);

// Normalizes a capacitated cover of the constructed instance (leaves out,
// domination vertices in, choice gadgets snapped to one full side) and
// reads off the dominating set of the source.
std::vector<int> map_cvcl1_back(const ReductionOutput& out, const std::vector<int>& cover);

// Independent set -> vertex cover below twice a maximal matching. Each
// source vertex becomes a path u1-u2-u3, each edge a four-vertex gadget,
// and the prescribed matching pairs u2u3 and e_u e_w. |M| = n + m,
// target = 2|M| - k.
ReductionOutput reduce_is_to_vcu2(const Graph& g, int k);

CoverCertificate map_is_forward(const ReductionOutput& out, const std::vector<int>& cover);

std::vector<int> map_vcu2_back(const ReductionOutput& out, const std::vector<int>& cover);

// Vertex cover -> the unbounded-degree variant of the below-upper-bound
// problem: add x adjacent to everything plus a pendant y. N = n + 2,
// max degree N - 1, target = n + 1 - k.
ReductionOutput reduce_vc_to_unbounded_vcu1(const Graph& g, int k);

CoverCertificate map_unbounded_forward(const ReductionOutput& out, const std::vector<int>& cover);

std::vector<int> map_unbounded_back(const ReductionOutput& out, const std::vector<int>& cover);

}  // namespace paramvc
