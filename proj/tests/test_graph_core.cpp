#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "happy/graph.hpp"
#include "happy/graph_classes.hpp"
#include "happy/oracles.hpp"
#include "happy/verify.hpp"

using namespace happy;
using happy::testing::p3_fixture;
using happy::testing::triangle;

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), InvalidInstance);
  CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), InvalidInstance);
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), InvalidInstance);
  Graph g(3, {{2, 1}});  // normalized
  CHECK(g.edges() == std::vector<Edge>{{1, 2}});
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(1, 3));
}

TEST_CASE("coloring must extend the precoloring") {
  ColoredGraph g = p3_fixture();
  CHECK_THROWS_AS(Coloring(g, {2, 1, 2}), ContractViolation);
  CHECK_THROWS_AS(Coloring(g, {1, 1}), ContractViolation);
  CHECK_THROWS_AS(Coloring(g, {1, 3, 2}), ContractViolation);
  Coloring ok(g, {1, 1, 2});
  CHECK(ok.color(2) == 1);
}

TEST_CASE("happy vertices on the p3 fixture") {
  ColoredGraph g = p3_fixture();
  CHECK(happy_vertices(g, Coloring(g, {1, 1, 2})) == std::set<Vertex>{1});
  CHECK(happy_vertices(g, Coloring(g, {1, 2, 2})) == std::set<Vertex>{3});
}

TEST_CASE("constant coloring makes every vertex happy") {
  ColoredGraph g(Graph(4, {{1, 2}, {2, 3}}), 3, {});
  CHECK(happy_vertices(g, Coloring(g, {2, 2, 2, 2})).size() == 4);
  CHECK(happy_edge_count(g, Coloring(g, {2, 2, 2, 2})) == 2);
}

TEST_CASE("triangle with an alternating coloring") {
  ColoredGraph g = triangle({});
  CHECK(happy_vertices(g, Coloring(g, {1, 2, 1})).empty());
  CHECK(happy_edge_count(g, Coloring(g, {1, 2, 1})) == 1);
}

TEST_CASE("isolated vertices are always happy") {
  ColoredGraph g(Graph(2, {}), 2, {{1, 1}});
  CHECK(happy_vertices(g, Coloring(g, {1, 2})).size() == 2);
}

TEST_CASE("potentially happy sets of the p3 fixture") {
  HappySets hs = potentially_happy_sets(p3_fixture());
  CHECK(hs.all == std::set<Vertex>{1, 3});
  CHECK(hs.per_color[1] == std::set<Vertex>{1});
  CHECK(hs.per_color[2] == std::set<Vertex>{3});
}

TEST_CASE("no precoloring means everything is potentially happy") {
  ColoredGraph g(Graph(4, {{1, 2}, {3, 4}}), 2, {});
  HappySets hs = potentially_happy_sets(g);
  CHECK(hs.all.size() == 4);
  CHECK(hs.per_color.empty());
}

TEST_CASE("conflicting precolored neighbors kill potential happiness") {
  HappySets hs = potentially_happy_sets(triangle({{1, 1}, {2, 2}}));
  CHECK(hs.all.empty());
}

TEST_CASE("induced square of the p3 fixture") {
  auto sq = induced_square(p3_fixture(), {1, 3});
  CHECK(sq.vertices == std::vector<Vertex>{1, 3});
  CHECK(sq.graph.edges() == std::vector<Edge>{{1, 2}});  // local ids
}

TEST_CASE("induced square of a singleton is edgeless") {
  auto sq = induced_square(p3_fixture(), {2});
  CHECK(sq.graph.vertex_count() == 1);
  CHECK(sq.graph.edge_count() == 0);
}

TEST_CASE("the square of a 5-cycle is complete") {
  ColoredGraph c5(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), 2, {});
  auto sq = induced_square(c5, {1, 2, 3, 4, 5});
  CHECK(sq.graph.edge_count() == 10);
}

TEST_CASE("square on the full vertex set contains the original edges") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    ColoredGraph g = random_colored_graph(seed, 8, 3);
    std::set<Vertex> all;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) all.insert(v);
    auto sq = induced_square(g, all);
    for (const auto& [u, v] : g.graph().edges())
      CHECK(sq.graph.adjacent(u, v));
  }
}

TEST_CASE("happy vertices are always potentially happy") {
  for (unsigned seed = 1; seed <= 40; ++seed) {
    ColoredGraph g = random_colored_graph(seed, 8, 3);
    HappySets hs = potentially_happy_sets(g);
    auto opt = brute_mhv(g);
    for (Vertex v : happy_vertices(g, opt.witness)) CHECK(hs.all.count(v));
  }
}

TEST_CASE("a happy vertex of a forced class carries the forcing color") {
  // Brute-force over every extension on small instances.
  for (unsigned seed = 1; seed <= 25; ++seed) {
    ColoredGraph g = random_colored_graph(seed, 6, 3);
    HappySets hs = potentially_happy_sets(g);
    std::vector<Vertex> uncolored;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
      if (!g.precolor(v)) uncolored.push_back(v);
    std::vector<Color> assignment(g.vertex_count(), 1);
    for (const auto& [v, c] : g.precoloring()) assignment[v - 1] = c;
    std::vector<int> digits(uncolored.size(), 0);
    while (true) {
      for (size_t i = 0; i < uncolored.size(); ++i)
        assignment[uncolored[i] - 1] = digits[i] + 1;
      Coloring c(g, assignment);
      for (Vertex v : happy_vertices(g, c))
        for (const auto& [color, members] : hs.per_color)
          if (members.count(v)) CHECK(c.color(v) == color);
      int pos = static_cast<int>(digits.size()) - 1;
      while (pos >= 0 && ++digits[pos] == g.num_colors()) digits[pos--] = 0;
      if (pos < 0) break;
    }
  }
}

TEST_CASE("graph class recognizers") {
  Graph p3(3, {{1, 2}, {2, 3}});
  Graph tri(3, {{1, 2}, {2, 3}, {1, 3}});
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  Graph two_p3s(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});

  CHECK(is_disjoint_p3s(p3));
  CHECK(is_disjoint_p3s(two_p3s));
  CHECK_FALSE(is_disjoint_p3s(tri));
  CHECK(is_disjoint_triangles(tri));
  CHECK_FALSE(is_disjoint_triangles(p3));
  CHECK(is_disjoint_stars(star));
  CHECK(is_disjoint_stars(p3));       // a 3-path is a star
  CHECK(is_disjoint_stars(Graph(2, {})));  // isolated vertices
  CHECK_FALSE(is_disjoint_stars(Graph(4, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK(is_cluster_graph(tri));
  CHECK_FALSE(is_cluster_graph(p3));
  CHECK(is_cluster_graph(p3, {2}));
}
