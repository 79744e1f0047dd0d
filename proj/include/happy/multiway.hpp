#pragma once

#include <optional>
#include <set>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

// Group Multiway Cut: delete at most `budget` vertices (terminals are
// deletable) so that no path joins terminals of different groups.
struct GmcInstance {
  Graph graph;
  std::vector<std::set<Vertex>> groups;  // pairwise disjoint; empties allowed
  long long budget = 0;                  // not part of the file format

  bool operator==(const GmcInstance& other) const {
    return graph == other.graph && groups == other.groups;
  }
};

void validate_gmc(const GmcInstance& inst);

// A coloring making every vertex of h happy, or nullopt iff a forbidden path
// exists: a path whose endpoints are precolored with distinct colors and
// whose every edge has an endpoint in h. Construction: each component of the
// graph on N[h] restricted to h-incident edges carries at most one precolor
// and is flooded with it (color 1 if none); everything else keeps its
// precolor or gets color 1.
std::optional<Coloring> feasible_happy_set(const ColoredGraph& g,
                                           const std::set<Vertex>& h);

struct GmcReduction {
  GmcInstance instance;           // graph on H(G,p) renumbered 1..h
  std::vector<Vertex> happy_ids;  // local -> original vertex ids
};

// (G,p,k) is a yes-instance of MHV iff the returned instance (square of G
// induced on the potentially happy vertices, grouped by forced color, budget
// h-k) is a yes-instance of Group Multiway Cut. Returns nullopt when
// k > h, in which case the MHV instance is trivially no.
std::optional<GmcReduction> mhv_to_gmc(const ColoredGraph& g, long long k);

struct MhvCompression {
  ColoredGraph graph;
  long long k;
  std::vector<Vertex> happy_ids;  // output vertex i (i <= h) = happy_ids[i-1]
};

// Equivalent instance with at most h(h-1)/2 + h + 2 vertices: the square on
// the potentially happy vertices, every edge subdivided, plus an adjacent
// precolored pair t1,t2 wired to all subdivision vertices.
MhvCompression gmc_compress_to_mhv(const ColoredGraph& g, long long k);

}  // namespace happy
