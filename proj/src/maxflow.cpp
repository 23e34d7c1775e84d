#include "paramvc/maxflow.hpp"

#include <limits>
#include <queue>

namespace paramvc {

MaxFlow::MaxFlow(int node_count) : out_(node_count) {}

int MaxFlow::add_arc(int from, int to, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

void MaxFlow::add_undirected_edge(int a, int b, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({b, capacity});
  arcs_.push_back({a, capacity});
  out_[a].push_back(id);
  out_[b].push_back(id + 1);
}

int MaxFlow::run(int source, int sink) {
  int total = 0;
  std::vector<int> via(out_.size());
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    via[source] = -2;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty() && via[sink] == -1) {
      int v = queue.front();
      queue.pop();
      for (int arc : out_[v]) {
        int w = arcs_[arc].to;
        if (arcs_[arc].capacity > 0 && via[w] == -1) {
          via[w] = arc;
          queue.push(w);
        }
      }
    }
    if (via[sink] == -1) break;
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = sink; v != source;) {
      int arc = via[v];
      bottleneck = std::min(bottleneck, arcs_[arc].capacity);
      v = arcs_[arc ^ 1].to;
    }
    for (int v = sink; v != source;) {
      int arc = via[v];
      arcs_[arc].capacity -= bottleneck;
      arcs_[arc ^ 1].capacity += bottleneck;
      v = arcs_[arc ^ 1].to;
    }
    total += bottleneck;
  }
  return total;
}

int MaxFlow::flow_on(int arc_id) const { return arcs_[arc_id ^ 1].capacity; }

std::vector<char> MaxFlow::source_side(int source) const {
  std::vector<char> reached(out_.size(), 0);
  std::queue<int> queue;
  reached[source] = 1;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int arc : out_[v]) {
      int w = arcs_[arc].to;
      if (arcs_[arc].capacity > 0 && !reached[w]) {
        reached[w] = 1;
        queue.push(w);
      }
    }
  }
  return reached;
}

}  // namespace paramvc
