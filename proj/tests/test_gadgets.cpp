#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "happy/gadgets.hpp"
#include "happy/graph_classes.hpp"
#include "happy/io.hpp"
#include "happy/oracles.hpp"
#include "happy/reference.hpp"
#include "happy/verify.hpp"

using namespace happy;
using happy::testing::c4_rmis;
using happy::testing::small_crbds;

TEST_CASE("rmis to mhv on the 4-cycle") {
  auto gi = gen_rmis_to_mhv(c4_rmis());
  CHECK(gi.graph.vertex_count() == 14);
  CHECK(gi.k_prime == 4);
  CHECK(gi.selectors.size() == 2);

  std::set<Vertex> sel(gi.selectors.begin(), gi.selectors.end());
  CHECK(is_disjoint_p3s(delete_vertices(gi.graph.graph(), sel)));

  // Source is solvable; so must the target be, at threshold k'.
  CHECK(brute_rmis(c4_rmis()).has_value());
  CHECK(brute_mhv(gi.graph).optimum >= gi.k_prime);
}

TEST_CASE("thresholds follow the formulas") {
  RmisInstance inst = c4_rmis();  // k=2, r=2, n=4, m=4
  CHECK(gen_rmis_to_mhv(inst).k_prime == 4);
  CHECK(gen_rmis_to_mhe(inst, MheVariant::kPath).k_prime == 68);
  CHECK(gen_rmis_to_mhe(inst, MheVariant::kTriangle).k_prime == 84);
  CHECK(gen_crbds_to_mhv(small_crbds()).k_prime == 2);
  CHECK(gen_crbds_to_mhe(small_crbds(), CrbdsMheVariant::kStar).k_prime == 8);
}

TEST_CASE("rmis to mhe structures") {
  auto path = gen_rmis_to_mhe(c4_rmis(), MheVariant::kPath);
  std::set<Vertex> sel(path.selectors.begin(), path.selectors.end());
  CHECK(is_disjoint_p3s(delete_vertices(path.graph.graph(), sel)));

  auto tri = gen_rmis_to_mhe(c4_rmis(), MheVariant::kTriangle);
  std::set<Vertex> sel2(tri.selectors.begin(), tri.selectors.end());
  CHECK(is_disjoint_triangles(delete_vertices(tri.graph.graph(), sel2)));
}

TEST_CASE("rmis to mhe equivalence on the 4-cycle") {
  auto path = gen_rmis_to_mhe(c4_rmis(), MheVariant::kPath);
  std::set<Vertex> mod(path.selectors.begin(), path.selectors.end());
  long long opt = exact_mhe_with_modulator(path.graph, mod);
  CHECK(opt >= path.k_prime);

  auto tri = gen_rmis_to_mhe(c4_rmis(), MheVariant::kTriangle);
  std::set<Vertex> mod2(tri.selectors.begin(), tri.selectors.end());
  CHECK(exact_mhe_with_modulator(tri.graph, mod2) >= tri.k_prime);
}

TEST_CASE("crbds to mhv on the small fixture") {
  auto gi = gen_crbds_to_mhv(small_crbds());
  CHECK(gi.graph.vertex_count() == 8);
  CHECK(gi.k_prime == 2);
  std::set<Vertex> sel(gi.selectors.begin(), gi.selectors.end());
  CHECK(is_disjoint_stars(delete_vertices(gi.graph.graph(), sel)));
  CHECK(brute_crbds(small_crbds()).has_value());
  CHECK(brute_mhv(gi.graph).optimum >= gi.k_prime);
}

TEST_CASE("crbds to mhe variants") {
  auto star = gen_crbds_to_mhe(small_crbds(), CrbdsMheVariant::kStar);
  std::set<Vertex> sel(star.selectors.begin(), star.selectors.end());
  CHECK(is_disjoint_stars(delete_vertices(star.graph.graph(), sel)));
  long long opt =
      exact_mhe_with_modulator(star.graph, sel);
  CHECK(opt >= star.k_prime);

  auto cluster = gen_crbds_to_mhe(small_crbds(), CrbdsMheVariant::kCluster);
  std::set<Vertex> sel2(cluster.selectors.begin(), cluster.selectors.end());
  CHECK(is_cluster_graph(delete_vertices(cluster.graph.graph(), sel2)));
  CHECK(cluster.k_prime == star.k_prime);
  CHECK(exact_mhe_with_modulator(cluster.graph, sel2) >= cluster.k_prime);
}

TEST_CASE("generator preconditions are enforced") {
  RmisInstance singleton;
  singleton.graph = Graph(3, {{1, 2}, {1, 3}, {2, 3}});
  singleton.k = 2;
  singleton.cliques = {{1, 2}, {3}};
  singleton.r = 2;
  CHECK_THROWS_AS(gen_rmis_to_mhv(singleton), ContractViolation);

  CrbdsInstance low_degree = small_crbds();
  low_degree.edges = {{1, 1}, {2, 2}, {3, 1}};  // blue 2 has degree 1
  CHECK_THROWS_AS(gen_crbds_to_mhv(low_degree), ContractViolation);

  CrbdsInstance thin_color = small_crbds();
  thin_color.coloring = {1, 1, 1, 2};  // color 2 used once
  CHECK_THROWS_AS(gen_crbds_to_mhv(thin_color), ContractViolation);
}

TEST_CASE("random rmis generation") {
  RmisInstance inst = gen_random_rmis(2, 2, 1, 7);
  CHECK(inst.graph.vertex_count() == 4);
  CHECK(inst.r == 2);  // validated as 2-regular on construction

  RmisInstance plain = gen_random_rmis(2, 3, 0, 1);
  CHECK(plain.r == 2);
  CHECK(plain.graph.edge_count() == 6);  // two disjoint triangles

  CHECK_THROWS_AS(gen_random_rmis(2, 1, 0, 1), ContractViolation);
  CHECK_THROWS_AS(gen_random_rmis(2, 2, 5, 1), ContractViolation);

  // An odd vertex count cannot host a perfect matching round.
  CHECK_THROWS_AS(gen_random_rmis(3, 3, 1, 1), GenerationError);

  CHECK(serialize_rmis(gen_random_rmis(3, 4, 3, 42)) ==
        serialize_rmis(gen_random_rmis(3, 4, 3, 42)));
}

TEST_CASE("random crbds generation") {
  CrbdsInstance inst = gen_random_crbds(2, 2, 2, 0.5, 3);
  CHECK(inst.num_red == 4);
  // both downstream preconditions hold by construction
  CHECK_NOTHROW(gen_crbds_to_mhv(inst));

  CrbdsInstance full = gen_random_crbds(2, 2, 2, 1.0, 3);
  CHECK(full.edges.size() == 8);  // complete bipartite

  CrbdsInstance single = gen_random_crbds(1, 3, 1, 0.0, 3);
  CHECK(single.num_blue == 1);
  int degree = 0;
  for (auto [r, b] : single.edges) degree += b == 1;
  CHECK(degree == 2);  // padded up to two
}
