#pragma once

#include <vector>

namespace paramvc {

// Edmonds-Karp max flow on an explicit arc list. Deterministic: BFS explores
// arcs in insertion order, so equal-value flows and min cuts are reproducible.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Adds a directed arc with the given capacity plus its residual reverse
  // arc; returns the arc id.
  int add_arc(int from, int to, int capacity);
  // Unit of convenience for undirected unit-capacity graphs.
  void add_undirected_edge(int a, int b, int capacity);

  int run(int source, int sink);

  int flow_on(int arc_id) const;
  // Nodes reachable from the source in the residual graph (valid after run).
  std::vector<char> source_side(int source) const;

 private:
  struct Arc {
    int to;
    int capacity;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace paramvc
