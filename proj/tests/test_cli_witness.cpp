// Drives the real binary and re-validates its witness files through the
// library evaluators.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "happy/graph.hpp"
#include "happy/io.hpp"

#ifndef HAPPY_CLI
#error "HAPPY_CLI must point at the binary"
#endif
#ifndef HAPPY_DATA
#error "HAPPY_DATA must point at the fixture directory"
#endif

using namespace happy;

namespace {

std::string data(const char* name) {
  return std::string(HAPPY_DATA) + "/" + name;
}

int run(const std::string& args, const std::string& stdout_path) {
  std::string cmd = std::string(HAPPY_CLI) + " " + args + " > " + stdout_path;
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

Coloring read_witness(const ColoredGraph& g, const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Color> colors(g.vertex_count(), 0);
  Vertex v;
  Color c;
  while (in >> v >> c) colors.at(v - 1) = c;
  return Coloring(g, std::move(colors));
}

long long verdict_opt(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string word, yesno, opt_word;
  long long opt = -1;
  in >> word >> yesno >> opt_word >> opt;
  REQUIRE(word == "VERDICT");
  REQUIRE(opt_word == "OPT");
  return opt;
}

}  // namespace

TEST_CASE("mhv witness files re-validate") {
  std::string witness = "/tmp/happy_test_witness_v.txt";
  std::string verdict = "/tmp/happy_test_verdict_v.txt";
  for (const char* algo : {"brute", "cluster-fpt"}) {
    int exit_code = run("solve-mhv " + data("p3.happy") + " -k 1 --algo " +
                            algo + " --witness " + witness,
                        verdict);
    CHECK(exit_code == 0);
    ColoredGraph g = parse_happy(read_file(data("p3.happy")));
    Coloring c = read_witness(g, witness);  // throws unless it extends p
    CHECK(static_cast<long long>(happy_vertices(g, c).size()) ==
          verdict_opt(verdict));
  }
}

TEST_CASE("mhe witness files re-validate") {
  std::string witness = "/tmp/happy_test_witness_e.txt";
  std::string verdict = "/tmp/happy_test_verdict_e.txt";
  int exit_code =
      run("solve-mhe " + data("p3.happy") + " -k 1 --witness " + witness,
          verdict);
  CHECK(exit_code == 0);
  ColoredGraph g = parse_happy(read_file(data("p3.happy")));
  Coloring c = read_witness(g, witness);
  CHECK(happy_edge_count(g, c) == verdict_opt(verdict));
}

TEST_CASE("generated instances round-trip through the binary") {
  std::string out = "/tmp/happy_test_gen.rmis";
  CHECK(run("gen random-rmis --cliques 2 --clique-size 3 --matchings 1 "
            "--seed 11 -o " + out,
            "/dev/null") == 0);
  RmisInstance inst = parse_rmis(read_file(out));
  CHECK(inst.graph.vertex_count() == 6);
  CHECK(inst.r == 3);
}
