#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "happy/oracles.hpp"
#include "happy/verify.hpp"

using namespace happy;
using happy::testing::c4_rmis;
using happy::testing::p3_fixture;
using happy::testing::small_crbds;
using happy::testing::triangle;

TEST_CASE("brute_mhv on the p3 fixture") {
  auto r = brute_mhv(p3_fixture());
  CHECK(r.optimum == 1);
  CHECK(r.witness == Coloring(p3_fixture(), {1, 1, 2}));
}

TEST_CASE("brute_mhv with no precoloring finds the constant coloring") {
  ColoredGraph g(Graph(4, {{1, 2}, {2, 3}, {3, 4}}), 3, {});
  auto r = brute_mhv(g);
  CHECK(r.optimum == 4);
  CHECK(r.witness == Coloring(g, {1, 1, 1, 1}));  // lexicographically least
}

TEST_CASE("brute_mhv on a conflicted triangle") {
  auto r = brute_mhv(triangle({{1, 1}, {2, 2}}));
  CHECK(r.optimum == 0);
}

TEST_CASE("brute_mhe examples") {
  CHECK(brute_mhe(triangle({{1, 1}, {2, 2}})).optimum == 1);
  CHECK(brute_mhe(p3_fixture()).optimum == 1);
  ColoredGraph free(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), 2, {});
  CHECK(brute_mhe(free).optimum == 4);
}

TEST_CASE("oracle budget errors are loud") {
  ColoredGraph big(Graph(30, {}), 4, {});
  CHECK_THROWS_AS(brute_mhv(big), BudgetExceeded);

  ColoredGraph medium(Graph(12, {}), 4, {});
  OracleOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(brute_mhv(medium, tight), BudgetExceeded);
  OracleOptions wide;
  wide.budget = 1ULL << 25;  // 4^12 fits
  CHECK(brute_mhv(medium, wide).optimum == 12);
}

TEST_CASE("parallel and serial oracle runs agree exactly") {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    ColoredGraph g = random_colored_graph(seed, 9, 3);
    OracleOptions serial;
    serial.parallel = false;
    auto a = brute_mhv(g), b = brute_mhv(g, serial);
    CHECK(a.optimum == b.optimum);
    CHECK(a.witness == b.witness);
    auto c = brute_mhe(g), d = brute_mhe(g, serial);
    CHECK(c.optimum == d.optimum);
    CHECK(c.witness == d.witness);
  }
}

TEST_CASE("adding precolored pairs never helps the optimum") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    ColoredGraph g = random_colored_graph(seed, 7, 3, 0.4, 0.3);
    if (g.num_colors() < 2) continue;
    std::vector<Vertex> uncolored;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
      if (!g.precolor(v)) uncolored.push_back(v);
    if (uncolored.size() < 2) continue;
    auto pre = g.precoloring();
    pre[uncolored[0]] = 1;
    pre[uncolored[1]] = 2;
    ColoredGraph tighter(g.graph(), g.num_colors(), pre);
    CHECK(brute_mhv(tighter).optimum <= brute_mhv(g).optimum);
  }
}

TEST_CASE("brute_gmc on the p3 groups") {
  GmcInstance inst;
  inst.graph = Graph(3, {{1, 2}, {2, 3}});
  inst.groups = {{1}, {3}};
  auto r = brute_gmc(inst);
  CHECK(r.min_cut == 1);
}

TEST_CASE("brute_gmc with one group needs no deletions") {
  GmcInstance inst;
  inst.graph = Graph(3, {{1, 2}, {2, 3}});
  inst.groups = {{1, 3}};
  CHECK(brute_gmc(inst).min_cut == 0);
}

TEST_CASE("brute_gmc may delete terminals") {
  GmcInstance inst;
  inst.graph = Graph(2, {{1, 2}});
  inst.groups = {{1}, {2}};
  CHECK(brute_gmc(inst).min_cut == 1);
}

TEST_CASE("gmc cut is bounded by keeping only the largest group") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    ColoredGraph base = random_colored_graph(seed, 8, 3);
    GmcInstance inst;
    inst.graph = base.graph();
    std::mt19937 rng(seed);
    inst.groups.resize(2 + seed % 2);
    for (Vertex v = 1; v <= inst.graph.vertex_count(); ++v)
      if (rng() % 2) inst.groups[rng() % inst.groups.size()].insert(v);
    long long terminals = 0, largest = 0, n = inst.graph.vertex_count();
    for (const auto& gset : inst.groups) {
      terminals += static_cast<long long>(gset.size());
      largest = std::max(largest, static_cast<long long>(gset.size()));
    }
    CHECK(brute_gmc(inst).min_cut <= n - terminals + (terminals - largest));
  }
}

TEST_CASE("brute_nmc basics") {
  Graph path(3, {{1, 2}, {2, 3}});
  CHECK(*brute_nmc(path, {1, 3}).min_cut == 1);
  CHECK_FALSE(brute_nmc(Graph(2, {{1, 2}}), {1, 2}).min_cut.has_value());
  CHECK(*brute_nmc(path, {2}).min_cut == 0);
}

TEST_CASE("nmc dominates gmc with singleton groups") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    ColoredGraph base = random_colored_graph(seed, 7, 3);
    std::mt19937 rng(seed * 31 + 7);
    std::set<Vertex> terminals;
    int want = std::min<int>(1 + rng() % 3, base.vertex_count());
    while (static_cast<int>(terminals.size()) < want)
      terminals.insert(1 + rng() % base.vertex_count());
    GmcInstance inst;
    inst.graph = base.graph();
    for (Vertex t : terminals) inst.groups.push_back({t});
    auto nmc = brute_nmc(base.graph(), terminals);
    auto gmc = brute_gmc(inst);
    if (nmc.min_cut) CHECK(*nmc.min_cut >= gmc.min_cut);
  }
}

TEST_CASE("brute_rmis on the 4-cycle") {
  auto r = brute_rmis(c4_rmis());
  REQUIRE(r.has_value());
  CHECK(*r == std::set<Vertex>{1, 4});
}

TEST_CASE("brute_rmis on k4 finds nothing") {
  RmisInstance inst;
  inst.graph = Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  inst.k = 2;
  inst.cliques = {{1, 2}, {3, 4}};
  inst.r = 3;
  CHECK_FALSE(brute_rmis(inst).has_value());
}

TEST_CASE("single clique rmis picks any vertex") {
  RmisInstance inst;
  inst.graph = Graph(2, {{1, 2}});
  inst.k = 1;
  inst.cliques = {{1, 2}};
  inst.r = 1;
  auto r = brute_rmis(inst);
  REQUIRE(r.has_value());
  CHECK(r->size() == 1);
}

TEST_CASE("brute_crbds finds a dominating transversal") {
  auto r = brute_crbds(small_crbds());
  REQUIRE(r.has_value());
  CHECK(r->size() == 2);
  // validate: distinct colors, dominates both blue vertices
  const CrbdsInstance inst = small_crbds();
  std::set<Color> colors;
  for (Vertex v : *r) colors.insert(inst.coloring[v - 1]);
  CHECK(colors.size() == 2);
  for (Vertex b = 1; b <= inst.num_blue; ++b) {
    bool dom = false;
    for (auto [rr, bb] : inst.edges)
      if (bb == b && r->count(rr)) dom = true;
    CHECK(dom);
  }
}

TEST_CASE("crbds with no blue vertices is trivially dominated") {
  CrbdsInstance inst;
  inst.num_red = 2;
  inst.num_blue = 0;
  inst.k = 1;
  inst.coloring = {1, 1};
  CHECK(brute_crbds(inst).has_value());
}

TEST_CASE("an isolated blue vertex cannot be dominated") {
  CrbdsInstance inst;
  inst.num_red = 2;
  inst.num_blue = 1;
  inst.k = 1;
  inst.coloring = {1, 1};
  CHECK_FALSE(brute_crbds(inst).has_value());
}

TEST_CASE("rmis validation rejects broken instances") {
  RmisInstance inst = c4_rmis();
  inst.r = 3;
  CHECK_THROWS_AS(validate_rmis(inst), InvalidInstance);
  inst = c4_rmis();
  inst.cliques = {{1, 4}, {2, 3}};  // parts are not cliques
  CHECK_THROWS_AS(validate_rmis(inst), InvalidInstance);
}
