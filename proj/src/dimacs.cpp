#include "paramvc/dimacs.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace paramvc {

namespace {

// Splits on single spaces; an empty token means doubled or trailing
// whitespace, which the strict format forbids.
std::vector<std::string> split_strict(const std::string& line, int line_no) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    std::string token = line.substr(start, pos == std::string::npos ? pos : pos - start);
    if (token.empty()) throw DimacsError(line_no, "malformed line (stray whitespace)");
    tokens.push_back(std::move(token));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return tokens;
}

int parse_int(const std::string& token, int line_no, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw DimacsError(line_no, std::string("malformed ") + what + " '" + token + "'");
  }
  if (used != token.size() || value < 0 || value > 1000000000)
    throw DimacsError(line_no, std::string("malformed ") + what + " '" + token + "'");
  return static_cast<int>(value);
}

}  // namespace

DimacsInstance parse_dimacs(std::istream& in) {
  int line_no = 0;
  int n = -1, m = -1, edges_read = 0;
  std::vector<Edge> edges;
  std::set<Edge> edge_set;
  std::vector<int> degree;
  std::vector<int> capacities;
  std::vector<char> has_capacity;
  bool any_capacity = false;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == 'c') continue;
    if (line.empty()) throw DimacsError(line_no, "empty line");
    auto tokens = split_strict(line, line_no);
    if (tokens[0] == "p") {
      if (n >= 0) throw DimacsError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "edge")
        throw DimacsError(line_no, "expected 'p edge <n> <m>'");
      n = parse_int(tokens[2], line_no, "vertex count");
      m = parse_int(tokens[3], line_no, "edge count");
      edges.reserve(m);
      degree.assign(n, 0);
      capacities.assign(n, 0);
      has_capacity.assign(n, 0);
    } else if (tokens[0] == "e") {
      if (n < 0) throw DimacsError(line_no, "edge before problem line");
      if (edges_read == m) throw DimacsError(line_no, "more edges than declared");
      if (tokens.size() != 3) throw DimacsError(line_no, "expected 'e <u> <v>'");
      int u = parse_int(tokens[1], line_no, "vertex id");
      int v = parse_int(tokens[2], line_no, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n)
        throw DimacsError(line_no, "vertex id out of range");
      if (u == v) throw DimacsError(line_no, "self-loop at vertex " + std::to_string(u));
      Edge e = make_edge(u - 1, v - 1);
      if (!edge_set.insert(e).second)
        throw DimacsError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                       std::to_string(v));
      edges.push_back(e);
      ++degree[u - 1];
      ++degree[v - 1];
      ++edges_read;
    } else if (tokens[0] == "x") {
      if (n < 0) throw DimacsError(line_no, "capacity before problem line");
      if (edges_read < m) throw DimacsError(line_no, "capacity line before all edges");
      if (tokens.size() != 3) throw DimacsError(line_no, "expected 'x <v> <cap>'");
      int v = parse_int(tokens[1], line_no, "vertex id");
      int cap = parse_int(tokens[2], line_no, "capacity");
      if (v < 1 || v > n) throw DimacsError(line_no, "vertex id out of range");
      if (has_capacity[v - 1])
        throw DimacsError(line_no, "duplicate capacity for vertex " + std::to_string(v));
      if (cap > degree[v - 1])
        throw DimacsError(line_no, "capacity of vertex " + std::to_string(v) +
                                       " exceeds its degree");
      has_capacity[v - 1] = 1;
      capacities[v - 1] = cap;
      any_capacity = true;
    } else {
      throw DimacsError(line_no, "unrecognized line type '" + tokens[0] + "'");
    }
  }
  if (n < 0) throw DimacsError(line_no + 1, "missing problem line");
  if (edges_read < m)
    throw DimacsError(line_no + 1, "edge count mismatch: declared " + std::to_string(m) +
                                       ", found " + std::to_string(edges_read));

  DimacsInstance instance{Graph(n, std::move(edges)), std::nullopt};
  if (any_capacity) {
    for (int v = 0; v < n; ++v)
      if (!has_capacity[v]) capacities[v] = instance.graph.degree(v);
    instance.capacities = std::move(capacities);
  }
  return instance;
}

DimacsInstance parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<int>* capacities) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (capacities) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((*capacities)[v] != g.degree(v))
        out << "x " << v + 1 << ' ' << (*capacities)[v] << '\n';
  }
}

}  // namespace paramvc
