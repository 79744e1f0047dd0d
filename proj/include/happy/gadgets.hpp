#pragma once

#include <vector>

#include "happy/graph.hpp"
#include "happy/oracles.hpp"

namespace happy {

enum class MheVariant { kPath, kTriangle };
enum class CrbdsMheVariant { kStar, kCluster };

struct GadgetInstance {
  ColoredGraph graph;
  long long k_prime;
  std::vector<Vertex> selectors;  // the selection-gadget vertices
};

// Per source edge uv a 3-vertex path whose endpoints are precolored u and v;
// selector s_i adjacent to every endpoint precolored with a color of clique
// i. Source is a yes-instance iff k*r happy vertices are achievable.
// Requires every clique to have at least two vertices.
GadgetInstance gen_rmis_to_mhv(const RmisInstance& inst);

// The edge-count analogue: the construction above plus selector-to-middle
// edges and, per clique color, m fully precolored anchor paths hanging off
// the selector. Threshold kr + (m+kr) + (3k+2n)m; the triangle variant
// closes every path into a triangle and adds n*m.
GadgetInstance gen_rmis_to_mhe(const RmisInstance& inst, MheVariant variant);

// Per blue vertex a star whose leaves are copies of its red neighbors,
// distinctly precolored; selector s_i adjacent to every copy of a red
// vertex colored i. Threshold |B|. Requires blue degrees >= 2 and at least
// two red vertices per color.
GadgetInstance gen_crbds_to_mhv(const CrbdsInstance& inst);

// Selectors attach to star centers instead of leaves; per red vertex |B|
// precolored anchors hang off its color's selector. Threshold (2+k)|B|; the
// cluster variant completes each star to a clique.
GadgetInstance gen_crbds_to_mhe(const CrbdsInstance& inst,
                                CrbdsMheVariant variant);

// k cliques of q vertices plus x rounds of cross-clique perfect matchings;
// the result is (q-1+x)-regular. Rounds are proposed by rotating position
// offsets around the clique cycle and fall back to seeded reshuffles when a
// proposal collides with existing edges; running out of retries raises
// GenerationError.
RmisInstance gen_random_rmis(int k, int q, int x, unsigned seed);

// k color classes of per_color red vertices, Bernoulli(edge_prob) edges,
// then every blue vertex is padded to degree >= 2 with its lowest-id
// non-neighbors.
CrbdsInstance gen_random_crbds(int k, int per_color, int num_blue,
                               double edge_prob, unsigned seed);

}  // namespace happy
