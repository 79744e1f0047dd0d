#pragma once

#include <string>
#include <vector>

#include "happy/cwexpr.hpp"
#include "happy/graph.hpp"

namespace happy {

struct VerifyResult {
  std::string suite;
  bool pass = true;
  long long cases = 0;
  std::vector<std::string> failures;  // first few mismatches, for diagnosis

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 16) failures.push_back(what);
  }
};

// Seeded instance generators shared by the suites and the tests.
ColoredGraph random_colored_graph(unsigned seed, int max_n, int max_ell,
                                  double edge_prob = 0.4,
                                  double precolor_prob = 0.4);
WExpression random_wexpr(unsigned seed, int num_vertices, int width);

// Cluster-FPT solver against the exhaustive oracle on instances whose
// cluster modulator has at most max_modulator vertices.
VerifyResult verify_cluster_fpt(int instances, unsigned seed0,
                                int max_modulator = 4);

// max-happy == |H| - min-cut through the Group Multiway Cut reduction.
VerifyResult verify_gmc_correspondence(int instances, unsigned seed0);

// linear_kernel, cubic_kernel and gmc_compress_to_mhv preserve yes/no for
// every k in [0, n] and respect their size bounds; cubic traces replay.
VerifyResult verify_kernels(int instances, unsigned seed0);

// Clique-width DP against the subset-enumeration oracle, plus the
// per-subexpression state bound.
VerifyResult verify_nmc_cw(int expressions, unsigned seed0);

// Exhaustive source/target equivalence for all four hardness generators on
// every RMIS instance with at most max_rmis_n vertices and every CRBDS
// instance with |R| <= 4, |B| <= 3 meeting the preconditions, the threshold
// formulas, and the selector-deletion structure checks.
VerifyResult verify_gadgets(int max_rmis_n = 6);

// find_cluster_modulator is minimum; clique_modulator_2approx is valid and
// within twice the optimum.
VerifyResult verify_modulators(int graphs, unsigned seed0);

// serialize/parse round-trip identity for all five formats.
VerifyResult verify_io_roundtrip(int per_format, unsigned seed0);

}  // namespace happy
