#pragma once

#include <optional>
#include <set>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

// One guess of the outer enumeration: which modulator vertices are happy in
// the optimal coloring, and how the coloring partitions the modulator into
// color classes.
struct ClusterGuess {
  std::set<Vertex> happy_subset;            // H, a subset of the modulator
  std::vector<std::set<Vertex>> partition;  // disjoint non-empty blocks
};

// Minimum set whose deletion leaves a disjoint union of cliques. Branches on
// the lexicographically first induced 3-vertex path, trying its vertices in
// ascending order, under iterative deepening; the result is deterministic.
std::set<Vertex> find_cluster_modulator(const Graph& g);

// The per-guess procedure: propagates color variables from the guess, pins
// variables forced by the precoloring, colors each clique of g \ s, and
// assigns the remaining variables by a maximum-weight matching saturating
// all of them. Returns a coloring making every vertex of happy_subset happy
// with the partition blocks monochromatic in pairwise distinct colors, or
// nullopt when the guess is contradictory.
std::optional<Coloring> find_coloring(const ColoredGraph& g,
                                      const std::set<Vertex>& s,
                                      const ClusterGuess& guess);

struct ClusterSolveResult {
  long long optimum;
  Coloring witness;
  std::set<Vertex> modulator;
  unsigned long long guesses;  // exactly 2^d * Bell(d)
};

// Maximum happy vertices via the guess enumeration over a cluster modulator.
// Guesses are independent; with parallel=true they are spread across OpenMP
// threads, and the winner (best count, lexicographically least guess) does
// not depend on scheduling.
ClusterSolveResult solve_mhv_cluster(
    const ColoredGraph& g, std::optional<std::set<Vertex>> s = std::nullopt,
    bool parallel = true);

// Restricted growth strings, the canonical set-partition encoding.
// first_rgs/next_rgs enumerate all partitions of d elements in
// lexicographic order.
std::vector<int> first_rgs(int d);
bool next_rgs(std::vector<int>& rgs);
unsigned long long bell_number(int d);

}  // namespace happy
