#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramvc/graph.hpp"

namespace paramvc {

// Parse error carrying the 1-based input line it was detected on.
class DimacsError : public std::runtime_error {
 public:
  DimacsError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// DIMACS edge format: optional "c" comment lines, one "p edge <n> <m>"
// problem line, then exactly m lines "e <u> <v>" with 1-based endpoints.
// Capacity extension: zero or more "x <v> <cap>" lines after the edges;
// vertices without an x line default to capacity = degree.
struct DimacsInstance {
  Graph graph;
  // Engaged iff the input carried at least one x line; defaults filled in.
  std::optional<std::vector<int>> capacities;
};

DimacsInstance parse_dimacs(std::istream& in);
DimacsInstance parse_dimacs_file(const std::string& path);

// Writes the graph back out in the same strict format, edges in
// lexicographic order. Capacity lines are emitted only where the capacity
// differs from the vertex degree.
void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<int>* capacities = nullptr);

}  // namespace paramvc
