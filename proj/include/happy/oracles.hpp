#pragma once

#include <optional>
#include <set>
#include <vector>

#include "happy/graph.hpp"
#include "happy/multiway.hpp"

namespace happy {

// Regular Multicolored Independent Set: pick one vertex per clique of an
// r-regular graph, forming an independent set.
struct RmisInstance {
  Graph graph;
  int k = 0;                              // number of cliques
  std::vector<std::set<Vertex>> cliques;  // partition of V, each a clique
  int r = 0;                              // common degree

  bool operator==(const RmisInstance& other) const {
    return graph == other.graph && k == other.k && cliques == other.cliques &&
           r == other.r;
  }
};

void validate_rmis(const RmisInstance& inst);

// Colourful Red-Blue Dominating Set: k distinctly colored red vertices
// dominating every blue vertex. Red vertices are 1..num_red, blue are
// 1..num_blue, in separate id spaces.
struct CrbdsInstance {
  int num_red = 0;
  int num_blue = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (red, blue), sorted
  int k = 0;
  std::vector<Color> coloring;  // coloring[r-1] in [k], total over red

  bool operator==(const CrbdsInstance& other) const {
    return num_red == other.num_red && num_blue == other.num_blue &&
           edges == other.edges && k == other.k && coloring == other.coloring;
  }
};

void validate_crbds(const CrbdsInstance& inst);

struct OracleOptions {
  unsigned long long budget = 10'000'000ULL;  // max enumerated candidates
  bool parallel = true;  // chunk the enumeration across OpenMP threads
};

struct BruteColoringResult {
  long long optimum;
  Coloring witness;  // lexicographically smallest optimum attainer
};

// Exhaustive maximum over all extensions of the precoloring. Enumeration is
// a mixed-radix counter over the uncolored vertices in ascending id, so the
// witness is deterministic regardless of chunking.
BruteColoringResult brute_mhv(const ColoredGraph& g,
                              const OracleOptions& opts = {});
BruteColoringResult brute_mhe(const ColoredGraph& g,
                              const OracleOptions& opts = {});

struct BruteCutResult {
  int min_cut;
  std::set<Vertex> witness;
};

// Minimum vertex set (terminals deletable) whose removal disconnects every
// cross-group terminal pair. Always solvable: deleting all terminals works.
BruteCutResult brute_gmc(const GmcInstance& inst,
                         const OracleOptions& opts = {});

struct BruteNmcResult {
  std::optional<int> min_cut;  // nullopt: terminals cannot be separated
  std::set<Vertex> witness;
};

// Node Multiway Cut: terminals are NOT deletable. Adjacent terminals make
// the instance unseparable.
BruteNmcResult brute_nmc(const Graph& g, const std::set<Vertex>& terminals,
                         const OracleOptions& opts = {});

// First independent transversal (one vertex per clique) in lexicographic
// order, or nullopt.
std::optional<std::set<Vertex>> brute_rmis(const RmisInstance& inst,
                                           const OracleOptions& opts = {});

// First distinctly-colored transversal of the color classes dominating all
// blue vertices, or nullopt.
std::optional<std::set<Vertex>> brute_crbds(const CrbdsInstance& inst,
                                            const OracleOptions& opts = {});

}  // namespace happy
