#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks through the installed binary. Each invocation runs in a
// scratch directory; stdout is captured to a file for comparison.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string scratch_dir() {
  static std::string dir = [] {
    std::string d = "/tmp/paramvc_cli_test_XXXXXX";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%s", d.c_str());
    if (!mkdtemp(buffer)) throw std::runtime_error("mkdtemp failed");
    return std::string(buffer);
  }();
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = scratch_dir() + "/stdout.txt";
  const std::string command =
      std::string(PARAMVC_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  return result;
}

void write_file(const std::string& name, const std::string& text) {
  std::ofstream out(scratch_dir() + "/" + name, std::ios::binary);
  out << text;
}

std::string at(const std::string& name) { return scratch_dir() + "/" + name; }

}  // namespace

TEST_CASE("cli solves the tight example families with the right exit codes") {
  REQUIRE(run("gen stars 2 3 --out " + at("stars.col")).exit_code == 0);
  CHECK(run("solve vcl1 --graph " + at("stars.col") + " -B 3 -k 0").exit_code == 0);

  REQUIRE(run("gen cliques 3 3 --out " + at("cliques.col")).exit_code == 0);
  CHECK(run("solve vcu1 --graph " + at("cliques.col") + " -B 3 -k 1").exit_code == 1);

  REQUIRE(run("gen cycle 5 --out " + at("c5.col")).exit_code == 0);
  CHECK(run("solve vcl1 --graph " + at("c5.col") + " -B 2 -k 0").exit_code == 1);
}

TEST_CASE("cli reports thresholds as exact fractions") {
  run("gen cycle 5 --out " + at("c5.col"));
  RunResult solve = run("solve vcl1 --graph " + at("c5.col") + " -B 2 -k 0");
  CHECK(solve.out.find("threshold: 5/2") != std::string::npos);
  CHECK(solve.out.find("answer: no") != std::string::npos);
  CHECK(solve.out.find("2.5") == std::string::npos);  // never a float
}

TEST_CASE("cli certificates verify and carry the pinned key order") {
  run("gen cycle 9 --out " + at("c9.col"));
  RunResult solve = run("solve vcu1 --graph " + at("c9.col") +
                        " -B 2 -k 1 --certificate " + at("c9cert.json"));
  CHECK(solve.exit_code == 0);
  std::string cert = slurp(at("c9cert.json"));
  CHECK(cert.find("\"problem\": \"vcu1\"") != std::string::npos);
  CHECK(cert.find("\"problem\"") < cert.find("\"answer\""));
  CHECK(cert.find("\"answer\"") < cert.find("\"cover\""));
  CHECK(cert.find("\"cover\"") < cert.find("\"threshold_num\""));
  CHECK(run("verify cover --graph " + at("c9.col") + " --object " + at("c9cert.json"))
            .exit_code == 0);
}

TEST_CASE("cli errors exit with code 2") {
  write_file("broken.col", "p edge 2 1\ne 1 1\n");
  CHECK(run("solve vcl1 --graph " + at("broken.col") + " -B 2 -k 0").exit_code == 2);
  write_file("heavy.col", "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
  CHECK(run("solve vcl1 --graph " + at("heavy.col") + " -B 2 -k 0").exit_code == 2);
  CHECK(run("verify cover --graph " + at("heavy.col") + " --object /nonexistent.json")
            .exit_code == 2);
}

TEST_CASE("cli verify distinguishes invalid objects") {
  run("gen path 4 --out " + at("p4.col"));
  write_file("cover_ok.json", "{\"vertices\": [2, 3]}");
  write_file("cover_bad.json", "{\"vertices\": [1]}");
  write_file("matching_max.json", "[[2, 3]]");
  write_file("matching_not_max.json", "[[1, 2]]");
  CHECK(run("verify cover --graph " + at("p4.col") + " --object " + at("cover_ok.json"))
            .exit_code == 0);
  RunResult bad = run("verify cover --graph " + at("p4.col") + " --object " + at("cover_bad.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("(2, 3)") != std::string::npos);  // the uncovered edge is named
  CHECK(run("verify matching-maximal --graph " + at("p4.col") + " --object " +
            at("matching_max.json"))
            .exit_code == 0);
  CHECK(run("verify matching-maximal --graph " + at("p4.col") + " --object " +
            at("matching_not_max.json"))
            .exit_code == 1);
}

TEST_CASE("cli bipartization output shapes") {
  run("gen cycle 5 --out " + at("c5.col"));
  write_file("bip.json", "[[1, 2]]");
  CHECK(run("verify bipartization --graph " + at("c5.col") + " --object " + at("bip.json"))
            .exit_code == 0);
  write_file("nonedge.json", "[[1, 3]]");
  CHECK(run("verify bipartization --graph " + at("c5.col") + " --object " + at("nonedge.json"))
            .exit_code == 1);
}

TEST_CASE("cli reduce reports the construction parameters") {
  run("gen cycle 4 --out " + at("c4.col"));
  RunResult cvcl1 = run("reduce ds-to-cvcl1 --graph " + at("c4.col") + " -k 1 --out " +
                        at("tmpred.col"));
  CHECK(cvcl1.exit_code == 0);
  CHECK(cvcl1.out.find("m=64") != std::string::npos);  // n(B+2)^2
  run("gen cycle 3 --out " + at("k3.col"));
  RunResult vcu2 = run("reduce is-to-vcu2 --graph " + at("k3.col") + " -k 1 --out " +
                       at("tmpred2.col"));
  CHECK(vcu2.exit_code == 0);
  CHECK(vcu2.out.find("matching: 6") != std::string::npos);  // |M| = n + m
}

TEST_CASE("cli solves edge bipartization with the documented JSON shape") {
  run("gen cycle 5 --out " + at("c5.col"));
  RunResult feasible = run("solve ebip --graph " + at("c5.col") + " -p 1");
  CHECK(feasible.exit_code == 0);
  CHECK(feasible.out.find("\"size\":1") != std::string::npos);
  run("gen cliques 1 3 --out " + at("k4.col"));
  RunResult infeasible = run("solve ebip --graph " + at("k4.col") + " -p 1");
  CHECK(infeasible.exit_code == 1);
  CHECK(infeasible.out.find("{\"feasible\":false}") != std::string::npos);
}

TEST_CASE("cli reduce, map and oracle round trip") {
  run("gen cycle 4 --out " + at("c4.col"));
  CHECK(run("reduce ds-to-cvcl1 --graph " + at("c4.col") + " -k 2 --out " + at("c4red.col"))
            .exit_code == 0);
  RunResult oracle = run("oracle min-ds --graph " + at("c4.col"));
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("\"optimum\": 2") != std::string::npos);

  write_file("ds.json", "{\"vertices\": [1, 2]}");
  CHECK(run("map forward --reduction " + at("c4red.col.json") + " --solution " + at("ds.json") +
            " --out " + at("fwd.json"))
            .exit_code == 0);
  CHECK(run("verify capacitated-cover --graph " + at("c4red.col") + " --object " +
            at("fwd.json"))
            .exit_code == 0);
  CHECK(run("map back --reduction " + at("c4red.col.json") + " --solution " + at("fwd.json") +
            " --out " + at("back.json"))
            .exit_code == 0);
  CHECK(slurp(at("back.json")).find("[\n    1,\n    2\n  ]") != std::string::npos);
}

TEST_CASE("cli outputs are byte-identical across runs") {
  run("gen random 10 3 42 --out " + at("r1.col"));
  run("gen random 10 3 42 --out " + at("r2.col"));
  CHECK(slurp(at("r1.col")) == slurp(at("r2.col")));
  CHECK(!slurp(at("r1.col")).empty());

  RunResult first = run("solve vcl1 --graph " + at("r1.col") + " -B 3 -k 2 --certificate " +
                        at("cert1.json"));
  RunResult second = run("solve vcl1 --graph " + at("r2.col") + " -B 3 -k 2 --certificate " +
                         at("cert2.json"));
  CHECK(first.exit_code == second.exit_code);
  // Reports differ only in the echoed file names; certificates must match.
  if (first.exit_code == 0) CHECK(slurp(at("cert1.json")) == slurp(at("cert2.json")));
}

TEST_CASE("cli gen families have the documented shapes") {
  RunResult stars = run("gen stars 2 3 --out " + at("g1.col"));
  CHECK(stars.out.find("n=8 m=6") != std::string::npos);
  RunResult cliques = run("gen cliques 3 3 --out " + at("g2.col"));
  CHECK(cliques.out.find("n=12 m=18") != std::string::npos);
  RunResult cycle = run("gen cycle 5 --out " + at("g3.col"));
  CHECK(cycle.out.find("n=5 m=5") != std::string::npos);
}
