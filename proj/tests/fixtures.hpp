#pragma once

#include "happy/graph.hpp"
#include "happy/oracles.hpp"

namespace happy::testing {

// Path 1-2-3 with p(1)=1, p(3)=2; the running example everywhere.
inline ColoredGraph p3_fixture() {
  return ColoredGraph(Graph(3, {{1, 2}, {2, 3}}), 2, {{1, 1}, {3, 2}});
}

inline ColoredGraph triangle(std::map<Vertex, Color> pre, int ell = 2) {
  return ColoredGraph(Graph(3, {{1, 2}, {1, 3}, {2, 3}}), ell, std::move(pre));
}

// The 4-cycle as an RMIS instance: cliques {1,2} and {3,4}, cross edges
// 1-3 and 2-4, 2-regular.
inline RmisInstance c4_rmis() {
  RmisInstance inst;
  inst.graph = Graph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  inst.k = 2;
  inst.cliques = {{1, 2}, {3, 4}};
  inst.r = 2;
  return inst;
}

// Four red vertices colored (1,1,2,2), two blue vertices; blue 1 sees red
// 1 and 3, blue 2 sees red 2 and 4.
inline CrbdsInstance small_crbds() {
  CrbdsInstance inst;
  inst.num_red = 4;
  inst.num_blue = 2;
  inst.k = 2;
  inst.coloring = {1, 1, 2, 2};
  inst.edges = {{1, 1}, {2, 2}, {3, 1}, {4, 2}};
  return inst;
}

}  // namespace happy::testing
