// Command-line entry point: solvers, reductions, oracles, verifiers and
// instance generators over DIMACS graph files. Exit codes: 0 = yes/valid,
// 1 = no/invalid, 2 = error. Reports go to stdout and are byte-identical
// across identical invocations; wall time goes to stderr.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paramvc/dimacs.hpp"
#include "paramvc/edge_bipartization.hpp"
#include "paramvc/json_io.hpp"
#include "paramvc/matching.hpp"
#include "paramvc/oracles.hpp"
#include "paramvc/reductions.hpp"
#include "paramvc/vcl1.hpp"
#include "paramvc/vcu1.hpp"

namespace {

using namespace paramvc;

int oracle_limit_override(int fallback) {
  const char* env = std::getenv("PARAMVC_ORACLE_LIMIT");
  if (!env) return fallback;
  try {
    return std::max(0, std::stoi(env));
  } catch (const std::exception&) {
    throw std::runtime_error("PARAMVC_ORACLE_LIMIT is not an integer");
  }
}

std::string echo_command(int argc, char** argv) {
  std::string echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo += ' ';
    echo += argv[i];
  }
  return echo;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

void require_in_range(const Graph& g, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count())
      throw std::runtime_error("vertex " + std::to_string(v + 1) + " out of range");
}

// ---------------------------------------------------------------- solve --

struct SolveArgs {
  std::string graph_path;
  int degree_bound = 0;
  int k = 0;
  std::string certificate_path;
  int threads = 1;
};

// Deterministic report for a solve run; thresholds stay integer fractions.
struct RunReport {
  std::string command;
  int n = 0, m = 0, degree_bound = 0, k = 0;
  long long threshold_num = 0, threshold_den = 1;
  bool answer = false;
  std::string certificate_path = "(none)";

  void print(std::ostream& out) const {
    out << "command: " << command << '\n';
    out << "instance: n=" << n << " m=" << m << " B=" << degree_bound << " k=" << k << '\n';
    out << "threshold: " << threshold_num << '/' << threshold_den << '\n';
    out << "answer: " << (answer ? "yes" : "no") << '\n';
    out << "certificate: " << certificate_path << '\n';
  }
};

int run_solve(const std::string& problem, const SolveArgs& args, const std::string& echo) {
  Graph g = parse_dimacs_file(args.graph_path).graph;
  bool yes = false;
  std::optional<CoverCertificate> certificate;
  long long threshold_num = 0, threshold_den = 1;
  if (problem == "vcl1") {
    threshold_num = g.edge_count() + static_cast<long long>(args.degree_bound) * args.k;
    threshold_den = args.degree_bound;
    Vcl1Result result = solve_vcl1({g, args.degree_bound, args.k}, args.threads);
    yes = result.yes;
    certificate = std::move(result.certificate);
  } else {
    threshold_num = static_cast<long long>(g.vertex_count()) * args.degree_bound -
                    static_cast<long long>(args.k) * (args.degree_bound + 1);
    threshold_den = args.degree_bound + 1;
    Vcu1Result result = solve_vcu1({g, args.degree_bound, args.k});
    yes = result.yes;
    certificate = std::move(result.certificate);
  }

  RunReport report{echo,        g.vertex_count(), g.edge_count(), args.degree_bound,
                   args.k,      threshold_num,    threshold_den,  yes,
                   "(none)"};
  if (yes && !args.certificate_path.empty()) {
    const CoverCertificate& cert = *certificate;
    if (cert.claimed_size != static_cast<int>(cert.vertices.size()) ||
        !covers_all_edges(g, cert.vertices) ||
        threshold_den * static_cast<long long>(cert.claimed_size) > threshold_num)
      throw std::runtime_error("internal certificate failed verification");
    write_text_file(args.certificate_path,
                    certificate_to_json(problem, yes, cert, threshold_num, threshold_den)
                            .dump(2) +
                        "\n");
    report.certificate_path = args.certificate_path;
  }
  report.print(std::cout);
  return yes ? 0 : 1;
}

int run_solve_ebip(const std::string& graph_path, int budget, const std::string& echo) {
  Graph g = parse_dimacs_file(graph_path).graph;
  auto result = min_edge_bipartization(g, budget);
  std::cout << "command: " << echo << '\n';
  std::cout << "instance: n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  std::cout << "budget: " << budget << '\n';
  std::cout << "result: " << bipartization_to_json(result).dump() << '\n';
  return result ? 0 : 1;
}

// --------------------------------------------------------------- reduce --

int run_reduce(const std::string& kind, const std::string& graph_path, int k,
               const std::string& out_path, const std::string& echo) {
  Graph g = parse_dimacs_file(graph_path).graph;
  ReductionOutput out;
  if (kind == "ds-to-cvcl1")
    out = reduce_ds_to_cvcl1(g, k);
  else if (kind == "is-to-vcu2")
    out = reduce_is_to_vcu2(g, k);
  else
    out = reduce_vc_to_unbounded_vcu1(g, k);

  std::ostringstream instance_text;
  if (out.kind == ReductionKind::Cvcl1) {
    CapacitatedInstance capacitated = out.as_capacitated();
    write_dimacs(instance_text, capacitated.graph, &capacitated.capacity);
  } else {
    write_dimacs(instance_text, out.graph);
  }
  write_text_file(out_path, instance_text.str());
  const std::string sidecar_path = out_path + ".json";
  write_text_file(sidecar_path, reduction_to_json(out).dump(2) + "\n");

  std::cout << "command: " << echo << '\n';
  std::cout << "instance: n=" << out.params.source_n << " m=" << out.params.source_m
            << " B=" << out.params.source_bound << " k=" << out.params.k << '\n';
  std::cout << "target: n=" << out.params.target_n << " m=" << out.params.target_m
            << " B=" << out.params.target_bound
            << " cover_size=" << out.params.target_cover_size << '\n';
  if (out.kind == ReductionKind::Vcu2)
    std::cout << "matching: " << out.params.matching_size << '\n';
  std::cout << "instance_file: " << out_path << '\n';
  std::cout << "sidecar: " << sidecar_path << '\n';
  return 0;
}

// ------------------------------------------------------------------ map --

int run_map(const std::string& direction, const std::string& reduction_path,
            const std::string& solution_path, const std::string& out_path,
            const std::string& echo) {
  ReductionOutput reduction = reduction_from_json(load_json_file(reduction_path));
  std::vector<int> given = solution_vertices_from_json(load_json_file(solution_path));

  Json result;
  if (direction == "forward") {
    CoverCertificate cert;
    switch (reduction.kind) {
      case ReductionKind::Cvcl1: cert = map_ds_forward(reduction, given); break;
      case ReductionKind::Vcu2: cert = map_is_forward(reduction, given); break;
      case ReductionKind::Vcu1Unbounded: cert = map_unbounded_forward(reduction, given); break;
    }
    result["vertices"] = vertices_to_json(cert.vertices);
    if (cert.assignment) {
      Json assignment = Json::array();
      for (const auto& [e, to] : *cert.assignment)
        assignment.push_back(Json::array({e.first + 1, e.second + 1, to + 1}));
      result["assignment"] = std::move(assignment);
    }
  } else {
    std::vector<int> mapped;
    switch (reduction.kind) {
      case ReductionKind::Cvcl1: mapped = map_cvcl1_back(reduction, given); break;
      case ReductionKind::Vcu2: mapped = map_vcu2_back(reduction, given); break;
      case ReductionKind::Vcu1Unbounded: mapped = map_unbounded_back(reduction, given); break;
    }
    result["vertices"] = vertices_to_json(mapped);
  }

  const std::string text = result.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  write_text_file(out_path, text);
  std::cout << "command: " << echo << '\n';
  std::cout << "kind: " << to_string(reduction.kind) << '\n';
  std::cout << "input_size: " << given.size() << '\n';
  std::cout << "output_size: " << result["vertices"].size() << '\n';
  std::cout << "solution_file: " << out_path << '\n';
  return 0;
}

// --------------------------------------------------------------- verify --

int run_verify(const std::string& kind, const std::string& graph_path,
               const std::string& object_path, const std::string& echo) {
  DimacsInstance instance = parse_dimacs_file(graph_path);
  const Graph& g = instance.graph;
  Json object = load_json_file(object_path);

  std::cout << "command: " << echo << '\n';
  auto verdict = [&](bool ok, const std::string& detail) {
    std::cout << "valid: " << (ok ? "yes" : "no") << '\n';
    if (!ok) std::cout << "reason: " << detail << '\n';
    return ok ? 0 : 1;
  };

  if (kind == "cover") {
    std::vector<int> cover = solution_vertices_from_json(object);
    require_in_range(g, cover);
    auto missing = first_uncovered_edge(g, cover);
    if (missing)
      return verdict(false, "edge (" + std::to_string(missing->first + 1) + ", " +
                                std::to_string(missing->second + 1) + ") is uncovered");
    return verdict(true, "");
  }
  if (kind == "capacitated-cover") {
    std::vector<int> cover = solution_vertices_from_json(object);
    require_in_range(g, cover);
    std::vector<int> caps;
    if (instance.capacities) {
      caps = *instance.capacities;
    } else {
      caps.resize(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) caps[v] = g.degree(v);
    }
    auto missing = first_uncovered_edge(g, cover);
    if (missing)
      return verdict(false, "edge (" + std::to_string(missing->first + 1) + ", " +
                                std::to_string(missing->second + 1) + ") is uncovered");
    if (!capacitated_cover_feasible(g, caps, cover).feasible)
      return verdict(false, "no capacity-respecting edge assignment exists");
    return verdict(true, "");
  }
  if (kind == "matching-maximal") {
    Matching m;
    m.pairs = solution_edges_from_json(object);
    std::sort(m.pairs.begin(), m.pairs.end());
    if (!is_matching(g, m)) return verdict(false, "not a matching of the graph");
    if (!is_maximal_matching(g, m)) return verdict(false, "an edge with both endpoints unmatched remains");
    return verdict(true, "");
  }
  // bipartization
  std::vector<Edge> removed = solution_edges_from_json(object);
  for (const auto& [u, v] : removed)
    if (!g.has_edge(u, v))
      return verdict(false, "edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                                ") is not in the graph");
  if (!is_edge_bipartization(g, removed))
    return verdict(false, "an odd cycle survives the deletion");
  return verdict(true, "");
}

// --------------------------------------------------------------- oracle --

int run_oracle(const std::string& kind, const std::string& graph_path) {
  DimacsInstance instance = parse_dimacs_file(graph_path);
  const Graph& g = instance.graph;
  Json out;
  if (kind == "min-vc") {
    out = oracle_result_to_json(bf_min_vertex_cover(g, oracle_limit_override(kDefaultVertexLimit)));
  } else if (kind == "min-cvc") {
    std::vector<int> caps;
    if (instance.capacities) {
      caps = *instance.capacities;
    } else {
      caps.resize(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) caps[v] = g.degree(v);
    }
    auto result = bf_min_capacitated_vc(g, caps, oracle_limit_override(kDefaultCapacitatedLimit));
    if (!result) {
      out["feasible"] = false;
    } else {
      out = oracle_result_to_json(*result);
    }
  } else if (kind == "min-ds") {
    out = oracle_result_to_json(
        bf_min_dominating_set(g, oracle_limit_override(kDefaultVertexLimit)));
  } else if (kind == "max-is") {
    out = oracle_result_to_json(
        bf_max_independent_set(g, oracle_limit_override(kDefaultVertexLimit)));
  } else if (kind == "min-ebip") {
    auto result = bf_min_edge_bipartization(g, oracle_limit_override(kDefaultEdgeLimit));
    out = oracle_result_to_json(*result);
  } else {
    out = oracle_result_to_json(bf_max_matching(g, oracle_limit_override(kDefaultEdgeLimit)));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

// ------------------------------------------------------------------ gen --

Graph gen_stars(int copies, int leaves) {
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c) {
    int center = c * (leaves + 1);
    for (int i = 1; i <= leaves; ++i) edges.push_back({center, center + i});
  }
  return Graph(copies * (leaves + 1), std::move(edges));
}

Graph gen_cliques(int copies, int bound) {
  std::vector<Edge> edges;
  const int size = bound + 1;
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) edges.push_back({c * size + i, c * size + j});
  return Graph(copies * size, std::move(edges));
}

Graph gen_cycle(int length) {
  if (length < 3) throw std::runtime_error("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) edges.push_back(make_edge(i, (i + 1) % length));
  return Graph(length, std::move(edges));
}

Graph gen_path(int length) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1});
  return Graph(length, std::move(edges));
}

// Candidate pairs in a seeded shuffle, kept with probability 1/2 unless a
// degree would exceed the bound. Hand-rolled Fisher-Yates so outputs are
// identical across platforms.
Graph gen_random(int n, int bound, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.push_back({u, v});
  for (std::size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[rng() % i]);
  std::vector<int> degree(n, 0);
  std::vector<Edge> edges;
  for (const auto& [u, v] : candidates) {
    if (degree[u] >= bound || degree[v] >= bound) continue;
    if (rng() & 1u) {
      edges.push_back({u, v});
      ++degree[u];
      ++degree[v];
    }
  }
  return Graph(n, std::move(edges));
}

int run_gen(const Graph& g, const std::string& out_path, const std::string& echo) {
  std::ostringstream text;
  write_dimacs(text, g);
  if (out_path.empty()) {
    std::cout << text.str();
    return 0;
  }
  write_text_file(out_path, text.str());
  std::cout << "command: " << echo << '\n';
  std::cout << "instance: n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  std::cout << "instance_file: " << out_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const auto started = std::chrono::steady_clock::now();
  const std::string echo = echo_command(argc, argv);

  CLI::App app{"Exact solvers, reductions and oracles for vertex-cover problems "
               "parameterized against tight bounds"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Decide a parameterized vertex cover instance");
  solve->require_subcommand(1);
  SolveArgs solve_args;
  std::string solve_problem;
  for (const char* name : {"vcl1", "vcu1"}) {
    auto* sub = solve->add_subcommand(
        name, name == std::string("vcl1") ? "Cover of size at most m/B + k"
                                          : "Cover of size at most nB/(B+1) - k");
    sub->add_option("--graph", solve_args.graph_path, "DIMACS instance")->required();
    sub->add_option("-B", solve_args.degree_bound, "degree bound")->required();
    sub->add_option("-k", solve_args.k, "parameter")->required();
    sub->add_option("--certificate", solve_args.certificate_path, "write the cover as JSON");
    sub->add_option("--threads", solve_args.threads, "worker threads (default 1)");
    sub->callback([&, name] { solve_problem = name; });
  }
  {
    auto* sub = solve->add_subcommand("ebip", "Minimum edge bipartization under a budget");
    sub->add_option("--graph", solve_args.graph_path, "DIMACS instance")->required();
    sub->add_option("-p", solve_args.k, "edge budget")->required();
    sub->callback([&] { solve_problem = "ebip"; });
  }

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Materialize a hardness reduction");
  reduce->require_subcommand(1);
  std::string reduce_kind, reduce_graph, reduce_out;
  int reduce_k = 0;
  for (const char* name : {"ds-to-cvcl1", "is-to-vcu2", "vc-to-vcu1u"}) {
    auto* sub = reduce->add_subcommand(name);
    sub->add_option("--graph", reduce_graph, "DIMACS source instance")->required();
    sub->add_option("-k", reduce_k, "source parameter")->required();
    sub->add_option("--out", reduce_out, "constructed DIMACS instance path")->required();
    sub->callback([&, name] { reduce_kind = name; });
  }

  // map
  auto* map_cmd = app.add_subcommand("map", "Translate solutions across a reduction");
  map_cmd->require_subcommand(1);
  std::string map_direction, map_reduction, map_solution, map_out;
  for (const char* name : {"forward", "back"}) {
    auto* sub = map_cmd->add_subcommand(name);
    sub->add_option("--reduction", map_reduction, "sidecar JSON from reduce")->required();
    sub->add_option("--solution", map_solution, "solution JSON")->required();
    sub->add_option("--out", map_out, "output path (default stdout)");
    sub->callback([&, name] { map_direction = name; });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Check an object against its definition");
  verify->require_subcommand(1);
  std::string verify_kind, verify_graph, verify_object;
  for (const char* name : {"cover", "capacitated-cover", "matching-maximal", "bipartization"}) {
    auto* sub = verify->add_subcommand(name);
    sub->add_option("--graph", verify_graph, "DIMACS instance")->required();
    sub->add_option("--object", verify_object, "object JSON")->required();
    sub->callback([&, name] { verify_kind = name; });
  }

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference solvers");
  oracle->require_subcommand(1);
  std::string oracle_kind, oracle_graph;
  for (const char* name :
       {"min-vc", "min-cvc", "min-ds", "max-is", "min-ebip", "max-matching"}) {
    auto* sub = oracle->add_subcommand(name);
    sub->add_option("--graph", oracle_graph, "DIMACS instance")->required();
    sub->callback([&, name] { oracle_kind = name; });
  }

  // gen
  auto* gen = app.add_subcommand("gen", "Deterministic instance generators");
  gen->require_subcommand(1);
  std::string gen_family, gen_out;
  int gen_a = 0, gen_b = 0;
  unsigned gen_seed = 0;
  {
    auto* sub = gen->add_subcommand("stars", "t disjoint stars K_{1,B}");
    sub->add_option("t", gen_a)->required();
    sub->add_option("B", gen_b)->required();
    sub->add_option("--out", gen_out);
    sub->callback([&] { gen_family = "stars"; });
  }
  {
    auto* sub = gen->add_subcommand("cliques", "t disjoint copies of K_{B+1}");
    sub->add_option("t", gen_a)->required();
    sub->add_option("B", gen_b)->required();
    sub->add_option("--out", gen_out);
    sub->callback([&] { gen_family = "cliques"; });
  }
  {
    auto* sub = gen->add_subcommand("cycle", "cycle on L vertices");
    sub->add_option("L", gen_a)->required();
    sub->add_option("--out", gen_out);
    sub->callback([&] { gen_family = "cycle"; });
  }
  {
    auto* sub = gen->add_subcommand("path", "path on L vertices");
    sub->add_option("L", gen_a)->required();
    sub->add_option("--out", gen_out);
    sub->callback([&] { gen_family = "path"; });
  }
  {
    auto* sub = gen->add_subcommand("random", "seeded random graph with max degree B");
    sub->add_option("n", gen_a)->required();
    sub->add_option("B", gen_b)->required();
    sub->add_option("seed", gen_seed)->required();
    sub->add_option("--out", gen_out);
    sub->callback([&] { gen_family = "random"; });
  }

  int exit_code = 0;
  try {
    app.parse(argc, argv);
    if (*solve) {
      exit_code = solve_problem == "ebip"
                      ? run_solve_ebip(solve_args.graph_path, solve_args.k, echo)
                      : run_solve(solve_problem, solve_args, echo);
    } else if (*reduce) {
      std::string kind = reduce_kind;
      exit_code = run_reduce(kind, reduce_graph, reduce_k, reduce_out, echo);
    } else if (*map_cmd) {
      exit_code = run_map(map_direction, map_reduction, map_solution, map_out, echo);
    } else if (*verify) {
      exit_code = run_verify(verify_kind, verify_graph, verify_object, echo);
    } else if (*oracle) {
      exit_code = run_oracle(oracle_kind, oracle_graph);
    } else if (*gen) {
      Graph g;
      if (gen_family == "stars")
        g = gen_stars(gen_a, gen_b);
      else if (gen_family == "cliques")
        g = gen_cliques(gen_a, gen_b);
      else if (gen_family == "cycle")
        g = gen_cycle(gen_a);
      else if (gen_family == "path")
        g = gen_path(gen_a);
      else
        g = gen_random(gen_a, gen_b, gen_seed);
      exit_code = run_gen(g, gen_out, echo);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    exit_code = 2;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "wall_time_ms=" << elapsed.count() << '\n';
  return exit_code;
}
