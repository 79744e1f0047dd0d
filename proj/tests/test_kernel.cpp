#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tuple>

#include "fixtures.hpp"
#include "happy/kernel.hpp"
#include "happy/oracles.hpp"
#include "happy/verify.hpp"

using namespace happy;
using happy::testing::p3_fixture;

TEST_CASE("2-approx clique modulator") {
  Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(clique_modulator_2approx(k4).empty());

  Graph p3(3, {{1, 2}, {2, 3}});
  CHECK(clique_modulator_2approx(p3) == std::set<Vertex>{1, 3});
  CHECK(exact_clique_modulator(p3).size() == 1);

  Graph isolated(2, {});
  CHECK(clique_modulator_2approx(isolated) == std::set<Vertex>{1, 2});
  CHECK(exact_clique_modulator(isolated).size() == 1);
}

TEST_CASE("unhappiness gadget") {
  ColoredGraph g(Graph(3, {{1, 2}, {2, 3}}), 2, {{1, 1}});

  SUBCASE("no targets adds an isolated edge") {
    auto a = attach_unhappiness_gadget(g, {});
    CHECK(a.graph.vertex_count() == 5);
    CHECK(a.graph.graph().adjacent(a.t1, a.t2));
    CHECK(a.graph.graph().degree(a.t1) == 1);
  }

  SUBCASE("targets leave the potentially happy set") {
    HappySets before = potentially_happy_sets(g);
    CHECK(before.all.count(2));
    auto a = attach_unhappiness_gadget(g, {2});
    CHECK_FALSE(potentially_happy_sets(a.graph).all.count(2));
  }

  SUBCASE("a second call reuses the pair") {
    auto a = attach_unhappiness_gadget(g, {2});
    auto b = attach_unhappiness_gadget(a.graph, {3},
                                       std::make_pair(a.t1, a.t2));
    CHECK(b.graph.vertex_count() == a.graph.vertex_count());
    CHECK(b.t1 == a.t1);
    CHECK_FALSE(potentially_happy_sets(b.graph).all.count(3));
  }

  SUBCASE("single-color instances are lifted") {
    ColoredGraph one(Graph(1, {}), 1, {});
    auto a = attach_unhappiness_gadget(one, {1});
    CHECK(a.graph.num_colors() == 2);
  }
}

TEST_CASE("linear kernel on a clean clique") {
  ColoredGraph k5(
      Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                {3, 4}, {3, 5}, {4, 5}}),
      2, {});
  auto lin = linear_kernel(k5, 0, {});
  CHECK(lin.graph.vertex_count() == 7);
  CHECK(brute_mhv(lin.graph).optimum == 5);
  CHECK(brute_mhv(k5).optimum == 5);
}

TEST_CASE("linear kernel with nothing potentially happy") {
  ColoredGraph g = happy::testing::triangle({{1, 1}, {2, 2}});
  auto lin = linear_kernel(g, 0, {});
  CHECK(brute_mhv(lin.graph).optimum == 0);
}

TEST_CASE("linear kernel on the p3 fixture for every threshold") {
  ColoredGraph g = p3_fixture();
  auto lin = linear_kernel(g, 0, {1, 3});
  long long in = brute_mhv(g).optimum;
  long long out = brute_mhv(lin.graph).optimum;
  for (long long k = 0; k <= 3; ++k) CHECK((in >= k) == (out >= k));
}

TEST_CASE("linear kernel demands a clique modulator") {
  CHECK_THROWS_AS(linear_kernel(p3_fixture(), 0, {2}), ContractViolation);
}

TEST_CASE("cubic kernel on small cliques") {
  ColoredGraph k4(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
                  2, {});
  auto cub = cubic_kernel(k4, 0, std::set<Vertex>{});
  // The gadget pair extends the modulator to d=2, so the isolated-slice
  // rule fires once and shifts the budget; equivalence is modulo that
  // shift.
  long long in = brute_mhv(k4).optimum;
  long long out = brute_mhv(cub.graph).optimum;
  CHECK(in == 4);
  for (long long k = 0; k <= 4; ++k)
    CHECK((in >= k) == (out >= k + cub.k));
  CHECK(cub.extended_modulator_size == 2);

  ColoredGraph rainbow(
      Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), 4,
      {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  auto r = cubic_kernel(rainbow, 0, std::set<Vertex>{});
  // ell = 4 exceeds d+1 = 3, so the clique side loses all candidates.
  CHECK(r.clique_pot_happy_after_rules == 0);
  CHECK(brute_mhv(r.graph).optimum == 0);
  CHECK(brute_mhv(rainbow).optimum == 0);
}

TEST_CASE("cubic trace replays to the identical instance") {
  for (unsigned seed = 300; seed < 330; ++seed) {
    ColoredGraph g = random_colored_graph(seed, 8, 3);
    auto cub = cubic_kernel(g, 2);
    auto replay = replay_trace(g, 2, cub.trace);
    CHECK(replay.first == cub.graph);
    CHECK(replay.second == cub.k);
  }
}

namespace {

// (in H, forced color) of a vertex; what an edge removal must not disturb.
std::pair<bool, Color> classification(const ColoredGraph& g, Vertex v) {
  HappySets hs = potentially_happy_sets(g);
  if (!hs.all.count(v)) return {false, 0};
  for (const auto& [color, members] : hs.per_color)
    if (members.count(v)) return {true, color};
  return {true, 0};
}

}  // namespace

TEST_CASE("edge removals preserve the clique endpoint's classification") {
  // A K6 with an uncolored apex over five of its vertices: with the
  // extended modulator of size three the apex has too many slice
  // neighbors, so the edge-removal rule must fire.
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= 6; ++u)
    for (Vertex v = u + 1; v <= 6; ++v) edges.push_back({u, v});
  for (Vertex u = 1; u <= 5; ++u) edges.push_back({u, 7});
  ColoredGraph apex(Graph(7, std::move(edges)), 2, {});

  int exercised = 0;
  auto sweep = [&](const ColoredGraph& g, auto s) {
    auto cub = cubic_kernel(g, 0, s);
    for (size_t i = 0; i < cub.trace.steps.size(); ++i) {
      if (cub.trace.steps[i].rule != KernelRule::kRemoveEdge) continue;
      ++exercised;
      Vertex u = cub.trace.steps[i].args[1];  // the clique-side endpoint
      KernelTrace before{
          {cub.trace.steps.begin(), cub.trace.steps.begin() + i}};
      KernelTrace after{
          {cub.trace.steps.begin(), cub.trace.steps.begin() + i + 1}};
      auto a = replay_trace(g, 0, before).first;
      auto b = replay_trace(g, 0, after).first;
      CHECK(classification(a, u) == classification(b, u));
    }
    // Shrinking the instance must preserve equivalence here as everywhere.
    long long in = brute_mhv(g).optimum;
    long long out = brute_mhv(cub.graph).optimum;
    for (long long k = 0; k <= g.vertex_count(); ++k)
      CHECK((in >= k) == (out >= k + cub.k));
  };
  sweep(apex, std::set<Vertex>{7});
  for (unsigned seed = 700; seed < 760; ++seed)
    sweep(random_colored_graph(seed, 9, 3, 0.6, 0.5), std::nullopt);
  CHECK(exercised >= 2);
}

TEST_CASE("every rule application lowers the termination measure") {
  // Lexicographic (ell, |H ∩ C|, |E|, k) over the working instance.
  auto measure = [](const ColoredGraph& g, const std::set<Vertex>& mod,
                    long long k) {
    HappySets hs = potentially_happy_sets(g);
    long long in_clique = 0;
    for (Vertex v : hs.all)
      if (!mod.count(v)) ++in_clique;
    return std::tuple<long long, long long, long long, long long>(
        g.num_colors(), in_clique, g.graph().edge_count(), k);
  };

  for (unsigned seed = 900; seed < 960; ++seed) {
    ColoredGraph g = random_colored_graph(seed, 9, 4, 0.5, 0.5);
    std::set<Vertex> s = clique_modulator_2approx(g.graph());
    auto cub = cubic_kernel(g, 3, s);
    std::set<Vertex> mod = s;
    for (size_t i = 0; i < cub.trace.steps.size(); ++i) {
      const auto& step = cub.trace.steps[i];
      if (step.rule == KernelRule::kAttachGadget) {
        mod.insert(step.args[0]);
        mod.insert(step.args[1]);
        continue;
      }
      if (step.rule == KernelRule::kLiftColors ||
          step.rule == KernelRule::kLinearExtract)
        continue;
      KernelTrace before{{cub.trace.steps.begin(), cub.trace.steps.begin() + i}};
      KernelTrace after{
          {cub.trace.steps.begin(), cub.trace.steps.begin() + i + 1}};
      auto a = replay_trace(g, 3, before);
      auto b = replay_trace(g, 3, after);
      CHECK(measure(b.first, mod, b.second) < measure(a.first, mod, a.second));
    }
  }
}

TEST_CASE("trace serialization is line oriented") {
  auto cub = cubic_kernel(p3_fixture(), 1);
  std::string text = serialize_trace(cub.trace);
  CHECK(text.find("attach-gadget") != std::string::npos);
  CHECK(text.find("linear") != std::string::npos);
}

TEST_CASE("kernel suite over random instances") {
  auto result = verify_kernels(25, 500);
  for (const auto& f : result.failures) MESSAGE(f);
  CHECK(result.pass);
}
