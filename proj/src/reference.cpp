#include "happy/reference.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "happy/graph_classes.hpp"

namespace happy {

namespace {

struct ModulatorSetup {
  std::vector<Vertex> mod;            // ascending
  std::vector<Vertex> mod_uncolored;  // subset of mod without precolor
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::vector<Vertex>> comp_uncolored;
};

ModulatorSetup prepare(const ColoredGraph& g, const std::set<Vertex>& modulator,
                       unsigned long long budget) {
  for (Vertex v : modulator)
    if (!g.graph().has_vertex(v)) throw ContractViolation("vertex out of range");
  ModulatorSetup s;
  s.mod.assign(modulator.begin(), modulator.end());
  for (Vertex v : s.mod)
    if (!g.precolor(v)) s.mod_uncolored.push_back(v);

  std::set<Vertex> rest;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!modulator.count(v)) rest.insert(v);
  s.comps = connected_components(g.graph(), rest);
  for (const auto& comp : s.comps) {
    std::vector<Vertex> unc;
    for (Vertex v : comp)
      if (!g.precolor(v)) unc.push_back(v);
    s.comp_uncolored.push_back(std::move(unc));
  }

  const unsigned long long ell = g.num_colors();
  unsigned long long outer = 1;
  for (size_t i = 0; i < s.mod_uncolored.size(); ++i) {
    if (outer > budget / std::max<unsigned long long>(ell, 1))
      throw BudgetExceeded("modulator coloring space too large");
    outer *= ell;
  }
  unsigned long long inner_total = 0;
  for (const auto& unc : s.comp_uncolored) {
    unsigned long long inner = 1;
    for (size_t i = 0; i < unc.size(); ++i) {
      if (inner > budget / std::max<unsigned long long>(ell, 1))
        throw BudgetExceeded("component coloring space too large");
      inner *= ell;
    }
    inner_total += inner;
  }
  if (s.mod.size() > 20) throw BudgetExceeded("modulator too large");
  if (outer > budget || inner_total > budget / std::max(outer, 1ULL))
    throw BudgetExceeded("enumeration too large");
  return s;
}

// Calls fn for every assignment of colors 1..ell to `slots` written into
// color[v].
void for_each_assignment(const std::vector<Vertex>& slots, int ell,
                         std::vector<Color>& color,
                         const std::function<void()>& fn) {
  if (slots.empty()) {
    fn();
    return;
  }
  std::vector<int> digits(slots.size(), 0);
  while (true) {
    for (size_t i = 0; i < slots.size(); ++i) color[slots[i]] = digits[i] + 1;
    fn();
    int pos = static_cast<int>(slots.size()) - 1;
    while (pos >= 0 && ++digits[pos] == ell) digits[pos--] = 0;
    if (pos < 0) break;
  }
}

}  // namespace

long long exact_mhv_with_modulator(const ColoredGraph& g,
                                   const std::set<Vertex>& modulator,
                                   unsigned long long budget) {
  ModulatorSetup s = prepare(g, modulator, budget);
  const Graph& graph = g.graph();
  const int mk = static_cast<int>(s.mod.size());

  std::vector<Color> color(g.vertex_count() + 1, 0);
  for (const auto& [v, c] : g.precoloring()) color[v] = c;

  long long best = 0;
  for_each_assignment(s.mod_uncolored, g.num_colors(), color, [&]() {
    // happy_ok[a]: modulator subset a is consistent inside the modulator.
    std::vector<char> mod_ok(1 << mk, 1);
    for (int a = 0; a < (1 << mk); ++a) {
      for (int i = 0; i < mk && mod_ok[a]; ++i) {
        if (!(a & (1 << i))) continue;
        for (Vertex u : graph.neighbors(s.mod[i]))
          if (modulator.count(u) && color[u] != color[s.mod[i]]) {
            mod_ok[a] = 0;
            break;
          }
      }
    }

    // contribution[a] over components: max happy vertices inside the
    // component subject to every modulator vertex of `a` keeping all its
    // component neighbors in its own color. -1 = infeasible.
    std::vector<long long> total(1 << mk, 0);
    std::vector<char> feasible(1 << mk, 1);
    for (size_t ci = 0; ci < s.comps.size(); ++ci) {
      const auto& comp = s.comps[ci];
      std::vector<long long> comp_best(1 << mk, -1);
      for_each_assignment(s.comp_uncolored[ci], g.num_colors(), color, [&]() {
        long long inside = 0;
        for (Vertex v : comp) {
          bool happy = true;
          for (Vertex u : graph.neighbors(v))
            if (color[u] != color[v]) {
              happy = false;
              break;
            }
          inside += happy;
        }
        int sat = 0;  // modulator vertices whose comp-neighbors all match
        for (int i = 0; i < mk; ++i) {
          bool ok = true;
          for (Vertex u : graph.neighbors(s.mod[i])) {
            if (!std::binary_search(comp.begin(), comp.end(), u)) continue;
            if (color[u] != color[s.mod[i]]) {
              ok = false;
              break;
            }
          }
          if (ok) sat |= 1 << i;
        }
        // Walk only the subsets of sat; everything else keeps -1.
        for (int a = sat;; a = (a - 1) & sat) {
          if (inside > comp_best[a]) comp_best[a] = inside;
          if (a == 0) break;
        }
      });
      for (int a = 0; a < (1 << mk); ++a) {
        if (comp_best[a] < 0)
          feasible[a] = 0;
        else
          total[a] += comp_best[a];
      }
    }

    for (int a = 0; a < (1 << mk); ++a) {
      if (!mod_ok[a] || !feasible[a]) continue;
      long long value = total[a] + __builtin_popcount(a);
      best = std::max(best, value);
    }
  });
  return best;
}

long long exact_mhe_with_modulator(const ColoredGraph& g,
                                   const std::set<Vertex>& modulator,
                                   unsigned long long budget) {
  ModulatorSetup s = prepare(g, modulator, budget);
  const Graph& graph = g.graph();

  std::vector<Color> color(g.vertex_count() + 1, 0);
  for (const auto& [v, c] : g.precoloring()) color[v] = c;

  long long best = 0;
  for_each_assignment(s.mod_uncolored, g.num_colors(), color, [&]() {
    long long value = 0;
    for (const auto& [u, v] : graph.edges())
      if (modulator.count(u) && modulator.count(v))
        value += color[u] == color[v];
    for (size_t ci = 0; ci < s.comps.size(); ++ci) {
      const auto& comp = s.comps[ci];
      long long comp_best = -1;
      for_each_assignment(s.comp_uncolored[ci], g.num_colors(), color, [&]() {
        long long here = 0;
        for (Vertex v : comp) {
          for (Vertex u : graph.neighbors(v)) {
            if (modulator.count(u))
              here += color[u] == color[v];
            else if (u > v)  // inner edge, count once
              here += color[u] == color[v];
          }
        }
        comp_best = std::max(comp_best, here);
      });
      value += comp_best;
    }
    best = std::max(best, value);
  });
  return best;
}

int exact_min_cluster_modulator_size(const Graph& g) {
  const int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::set<Vertex> s;
      for (int i : pick) s.insert(i + 1);
      if (is_cluster_graph(g, s)) return size;
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return n;
}

bool forbidden_path_exists(const ColoredGraph& g, const std::set<Vertex>& h) {
  const Graph& graph = g.graph();
  std::vector<char> on_path(g.vertex_count() + 1, 0);

  // DFS over simple paths starting at a precolored vertex, walking only
  // edges with an endpoint in h.
  std::function<bool(Vertex, Color)> extend = [&](Vertex v,
                                                  Color start) -> bool {
    for (Vertex u : graph.neighbors(v)) {
      if (on_path[u]) continue;
      if (!h.count(v) && !h.count(u)) continue;
      auto cu = g.precolor(u);
      if (cu && *cu != start) return true;
      on_path[u] = 1;
      bool found = extend(u, start);
      on_path[u] = 0;
      if (found) return true;
    }
    return false;
  };

  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    auto cv = g.precolor(v);
    if (!cv) continue;
    on_path[v] = 1;
    bool found = extend(v, *cv);
    on_path[v] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace happy
