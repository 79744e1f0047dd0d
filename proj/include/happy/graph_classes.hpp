#pragma once

#include <set>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

// Components in ascending order of their smallest vertex; each sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Same, restricted to the induced subgraph on `keep`.
std::vector<std::vector<Vertex>> connected_components(
    const Graph& g, const std::set<Vertex>& keep);

// A cluster graph is a disjoint union of cliques, equivalently a graph with
// no induced path on three vertices.
bool is_cluster_graph(const Graph& g);
bool is_cluster_graph(const Graph& g, const std::set<Vertex>& deleted);

bool is_disjoint_p3s(const Graph& g);
bool is_disjoint_triangles(const Graph& g);

// Every component has a vertex covering all its edges (K1 and K2 count).
bool is_disjoint_stars(const Graph& g);

// The graph with `deleted` removed, renumbered to 1..n-|deleted|.
Graph delete_vertices(const Graph& g, const std::set<Vertex>& deleted);

}  // namespace happy
