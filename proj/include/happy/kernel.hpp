#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

// A clique modulator of size at most twice the optimum: both endpoints of a
// greedily maximal matching in the complement, scanned in ascending order.
std::set<Vertex> clique_modulator_2approx(const Graph& g);

// Minimum clique modulator by exhaustive search; for verification only.
std::set<Vertex> exact_clique_modulator(const Graph& g);

struct GadgetAttachment {
  ColoredGraph graph;
  Vertex t1, t2;
};

// Adds (or reuses) the adjacent pair t1,t2 precolored 1 and 2 and wires both
// to every target, which makes each target permanently unhappy. Instances
// with a single color are lifted to two first.
GadgetAttachment attach_unhappiness_gadget(
    const ColoredGraph& g, const std::set<Vertex>& targets,
    std::optional<std::pair<Vertex, Vertex>> existing = std::nullopt);

struct LinearKernelResult {
  ColoredGraph graph;
  long long k;
  std::vector<Vertex> kept;  // original ids; output vertex i = kept[i-1]
  Vertex t1, t2;             // gadget pair in the output numbering
};

// Kernel for instances whose graph minus s is a clique: keeps the
// potentially happy vertices, one precolored witness each, one clique
// neighbor per modulator vertex and one common neighbor per modulator pair,
// then makes everything not potentially happy explicitly unhappy. Output has
// at most 2h + 3|s| + 3*C(|s|,2) + 2 vertices and is equivalent for the
// same k.
LinearKernelResult linear_kernel(const ColoredGraph& g, long long k,
                                 const std::set<Vertex>& s);

enum class KernelRule {
  kLiftColors,     // args: new number of colors
  kAttachGadget,   // args: t1, t2
  kRemoveColor,    // RR1, args: removed color
  kClassUnhappy,   // RR2, args: color, vertices made unhappy...
  kRemoveEdge,     // RR3, args: modulator vertex, clique vertex
  kIsolatedUnhappy,   // RR4, args: vertex (k decreases by one)
  kPrecoloredUnhappy, // RR5, args: one vertex per color class (k decreases)
  kLinearExtract,  // args: |T|, T..., t1, t2, gadget targets...
};

struct KernelTraceStep {
  KernelRule rule;
  std::vector<int> args;

  bool operator==(const KernelTraceStep&) const = default;
};

struct KernelTrace {
  std::vector<KernelTraceStep> steps;

  bool operator==(const KernelTrace&) const = default;
};

std::string serialize_trace(const KernelTrace& trace);

struct CubicKernelResult {
  ColoredGraph graph;
  long long k;
  KernelTrace trace;
  int extended_modulator_size;        // includes the gadget pair
  int clique_pot_happy_after_rules;   // |C ∩ H| when the rule loop stopped
};

// The distance-to-clique kernel: attach the gadget pair (extending the
// modulator), run reduction rules 1-5 exhaustively with restarts, then hand
// over to linear_kernel. When s is absent the 2-approximate modulator is
// used. Output size is O(d^3) in the extended modulator size d.
CubicKernelResult cubic_kernel(const ColoredGraph& g, long long k,
                               std::optional<std::set<Vertex>> s = std::nullopt);

// Mechanically re-applies a recorded trace; the result must equal the
// pipeline output exactly.
std::pair<ColoredGraph, long long> replay_trace(const ColoredGraph& g,
                                                long long k,
                                                const KernelTrace& trace);

}  // namespace happy
