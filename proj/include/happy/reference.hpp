#pragma once

#include <set>

#include "happy/graph.hpp"

namespace happy {

// Reference algorithms used only to cross-check the solvers. They share no
// code with the paths they verify.

// Exact maximum happy vertices / edges for graphs where deleting `modulator`
// leaves small components: enumerate modulator colorings, then optimize each
// component independently (for vertices, additionally fixing which modulator
// vertices are required to be happy). Throws BudgetExceeded when the
// enumeration would be too large.
long long exact_mhv_with_modulator(const ColoredGraph& g,
                                   const std::set<Vertex>& modulator,
                                   unsigned long long budget = 100'000'000ULL);
long long exact_mhe_with_modulator(const ColoredGraph& g,
                                   const std::set<Vertex>& modulator,
                                   unsigned long long budget = 100'000'000ULL);

// Minimum cluster-modulator size by subset enumeration.
int exact_min_cluster_modulator_size(const Graph& g);

// Path-enumeration oracle for the feasibility criterion: does some simple
// path join two differently precolored vertices with every edge incident to
// h?
bool forbidden_path_exists(const ColoredGraph& g, const std::set<Vertex>& h);

}  // namespace happy
