#include "happy/cluster_fpt.hpp"

#include <algorithm>
#include <map>

#include "happy/graph_classes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace happy {

namespace {

// Smallest (x,y,z) with x<y<z inducing a path on three vertices, or empty.
std::vector<Vertex> first_induced_p3(const Graph& g,
                                     const std::vector<char>& deleted) {
  const int n = g.vertex_count();
  for (Vertex x = 1; x <= n; ++x) {
    if (deleted[x]) continue;
    for (Vertex y = x + 1; y <= n; ++y) {
      if (deleted[y]) continue;
      for (Vertex z = y + 1; z <= n; ++z) {
        if (deleted[z]) continue;
        int edges = g.adjacent(x, y) + g.adjacent(x, z) + g.adjacent(y, z);
        if (edges == 2) return {x, y, z};
      }
    }
  }
  return {};
}

bool branch_modulator(const Graph& g, std::vector<char>& deleted, int budget,
                      std::vector<Vertex>& chosen) {
  auto p3 = first_induced_p3(g, deleted);
  if (p3.empty()) return true;
  if (budget == 0) return false;
  for (Vertex v : p3) {
    deleted[v] = 1;
    chosen.push_back(v);
    if (branch_modulator(g, deleted, budget - 1, chosen)) return true;
    chosen.pop_back();
    deleted[v] = 0;
  }
  return false;
}

}  // namespace

std::set<Vertex> find_cluster_modulator(const Graph& g) {
  std::vector<char> deleted(g.vertex_count() + 1, 0);
  std::vector<Vertex> chosen;
  for (int budget = 0; budget <= g.vertex_count(); ++budget) {
    if (branch_modulator(g, deleted, budget, chosen))
      return std::set<Vertex>(chosen.begin(), chosen.end());
  }
  return {};  // unreachable: deleting everything is always enough
}

std::vector<int> first_rgs(int d) { return std::vector<int>(d, 0); }

bool next_rgs(std::vector<int>& rgs) {
  const int d = static_cast<int>(rgs.size());
  for (int i = d - 1; i >= 1; --i) {
    int prefix_max = 0;
    for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
    if (rgs[i] <= prefix_max) {
      ++rgs[i];
      std::fill(rgs.begin() + i + 1, rgs.end(), 0);
      return true;
    }
  }
  return false;
}

unsigned long long bell_number(int d) {
  // Bell triangle.
  std::vector<unsigned long long> row{1};
  for (int i = 1; i <= d; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (unsigned long long x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

namespace {

constexpr long long kNoWeight = -1;

// Maximum-weight matching on (variables x candidate colors) saturating all
// variables, via subset DP over the variables; t is small. On weight ties
// the reconstruction walks colors in ascending order and hands the color to
// the lowest eligible variable, so the output is deterministic.
struct Matcher {
  int t;
  std::vector<Color> colors;               // ascending candidates
  std::vector<std::vector<long long>> wt;  // wt[var][color idx], -1 = no edge

  // best[ci][mask]: max weight matching `mask` using colors ci..end.
  std::vector<std::vector<long long>> best;

  static constexpr long long kImpossible = -(1LL << 60);

  void solve() {
    const int m = static_cast<int>(colors.size());
    const int full = 1 << t;
    best.assign(m + 1, std::vector<long long>(full, kImpossible));
    best[m][0] = 0;
    for (int ci = m - 1; ci >= 0; --ci) {
      for (int mask = 0; mask < full; ++mask) {
        long long b = best[ci + 1][mask];  // color unused
        for (int var = 0; var < t; ++var) {
          if (!(mask & (1 << var)) || wt[var][ci] == kNoWeight) continue;
          long long sub = best[ci + 1][mask ^ (1 << var)];
          if (sub != kImpossible) b = std::max(b, sub + wt[var][ci]);
        }
        best[ci][mask] = b;
      }
    }
  }

  // var -> color, or nullopt when no saturating matching exists.
  std::optional<std::vector<Color>> extract() {
    solve();
    const int m = static_cast<int>(colors.size());
    int mask = (1 << t) - 1;
    if (best[0][mask] == kImpossible) return std::nullopt;
    std::vector<Color> assign(t, 0);
    long long remaining = best[0][mask];
    for (int ci = 0; ci < m && mask; ++ci) {
      for (int var = 0; var < t; ++var) {
        if (!(mask & (1 << var)) || wt[var][ci] == kNoWeight) continue;
        long long sub = best[ci + 1][mask ^ (1 << var)];
        if (sub != kImpossible && sub + wt[var][ci] == remaining) {
          assign[var] = colors[ci];
          mask ^= 1 << var;
          remaining = sub;
          break;
        }
      }
      // Otherwise leave this color unused.
    }
    return assign;
  }
};

}  // namespace

std::optional<Coloring> find_coloring(const ColoredGraph& g,
                                      const std::set<Vertex>& s,
                                      const ClusterGuess& guess) {
  const Graph& graph = g.graph();
  const int n = g.vertex_count();
  const int ell = g.num_colors();
  const int t = static_cast<int>(guess.partition.size());

  if (!is_cluster_graph(graph, s))
    throw ContractViolation("graph minus modulator is not a cluster graph");
  {
    std::set<Vertex> covered;
    for (const auto& block : guess.partition) {
      if (block.empty()) throw ContractViolation("empty partition block");
      for (Vertex v : block) {
        if (!s.count(v)) throw ContractViolation("block vertex outside modulator");
        if (!covered.insert(v).second)
          throw ContractViolation("partition blocks overlap");
      }
    }
    if (covered.size() != s.size())
      throw ContractViolation("partition does not cover the modulator");
    for (Vertex v : guess.happy_subset)
      if (!s.count(v)) throw ContractViolation("happy subset outside modulator");
  }

  if (t > ell) return std::nullopt;  // injective variable->color map impossible

  std::vector<int> sigma(n + 1, 0);  // 0 = unassigned, else variable 1..t
  std::vector<Color> pre(n + 1, 0);  // working precoloring, extended below
  for (const auto& [v, col] : g.precoloring()) pre[v] = col;

  for (int b = 0; b < t; ++b)
    for (Vertex v : guess.partition[b]) sigma[v] = b + 1;

  // Neighbors of happy vertices must share their variable.
  for (Vertex v : guess.happy_subset) {
    for (Vertex u : graph.neighbors(v)) {
      if (sigma[u] == 0)
        sigma[u] = sigma[v];
      else if (sigma[u] != sigma[v])
        return std::nullopt;
    }
  }

  // Variables pinned by the precoloring; the map must be injective.
  std::vector<Color> lambda(t + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (sigma[v] == 0 || pre[v] == 0) continue;
    if (lambda[sigma[v]] == 0)
      lambda[sigma[v]] = pre[v];
    else if (lambda[sigma[v]] != pre[v])
      return std::nullopt;
  }
  {
    std::set<Color> used;
    for (int i = 1; i <= t; ++i)
      if (lambda[i] && !used.insert(lambda[i]).second) return std::nullopt;
  }

  // A pinned variable identifies its color: extend both maps.
  for (int i = 1; i <= t; ++i) {
    if (!lambda[i]) continue;
    for (Vertex v = 1; v <= n; ++v) {
      if (pre[v] == lambda[i]) sigma[v] = i;
      if (sigma[v] == i) pre[v] = lambda[i];
    }
  }

  // Per-variable weights toward each clique's unique precolor.
  std::map<std::pair<int, Color>, long long> weight;
  std::set<Vertex> s_set(s.begin(), s.end());
  std::set<Vertex> cluster_side;
  for (Vertex v = 1; v <= n; ++v)
    if (!s_set.count(v)) cluster_side.insert(v);

  for (const auto& comp : connected_components(graph, cluster_side)) {
    std::set<Color> pc;
    std::set<int> sc;
    for (Vertex v : comp) {
      if (pre[v]) pc.insert(pre[v]);
      if (sigma[v]) sc.insert(sigma[v]);
    }
    if (pc.size() >= 2 || sc.size() >= 2) {
      // No vertex of this clique can be happy; fill with color 1.
      for (Vertex v : comp)
        if (!pre[v] && !sigma[v]) pre[v] = 1;
      continue;
    }
    // counts[i]: vertices whose assigned closed neighborhood is exactly
    // variable i+1; vertices with no assigned neighbor are happy under any
    // uniform clique color and are not counted.
    std::vector<long long> counts(t, 0);
    for (Vertex v : comp) {
      std::set<int> seen;
      if (sigma[v]) seen.insert(sigma[v]);
      for (Vertex u : graph.neighbors(v))
        if (sigma[u]) seen.insert(sigma[u]);
      if (seen.size() == 1) ++counts[*seen.begin() - 1];
    }
    if (pc.empty()) {
      int pick;
      if (!sc.empty()) {
        pick = *sc.begin();  // the variable already present in the clique
      } else if (t == 0) {
        for (Vertex v : comp) pre[v] = 1;
        continue;
      } else {
        pick = 1;
        for (int i = 0; i < t; ++i)
          if (counts[i] > counts[pick - 1]) pick = i + 1;
      }
      for (Vertex v : comp) sigma[v] = pick;
    } else {
      Color a = *pc.begin();
      for (Vertex v : comp)
        if (!pre[v] && !sigma[v]) pre[v] = a;
      for (int i = 1; i <= t; ++i) {
        if (counts[i - 1] == 0) continue;
        if (lambda[i] == 0 || lambda[i] == a)  // edge exists in B
          weight[{i, a}] += counts[i - 1];
      }
    }
  }

  std::vector<Color> witness(n);
  if (t > 0) {
    // Candidate colors: pinned ones, weighted ones, plus the lowest spares.
    std::set<Color> candidates;
    for (int i = 1; i <= t; ++i)
      if (lambda[i]) candidates.insert(lambda[i]);
    for (const auto& [edge, w] : weight) {
      (void)w;
      candidates.insert(edge.second);
    }
    for (Color c = 1, added = 0; c <= ell && added < t; ++c)
      if (candidates.insert(c).second) ++added;

    Matcher matcher;
    matcher.t = t;
    matcher.colors.assign(candidates.begin(), candidates.end());
    matcher.wt.assign(t, std::vector<long long>(matcher.colors.size(),
                                                kNoWeight));
    for (int i = 1; i <= t; ++i) {
      for (size_t ci = 0; ci < matcher.colors.size(); ++ci) {
        Color a = matcher.colors[ci];
        if (lambda[i] != 0 && lambda[i] != a) continue;
        auto it = weight.find({i, a});
        matcher.wt[i - 1][ci] = it == weight.end() ? 0 : it->second;
      }
    }
    auto assignment = matcher.extract();
    if (!assignment) return std::nullopt;
    for (int i = 1; i <= t; ++i) lambda[i] = (*assignment)[i - 1];
  }

  for (Vertex v = 1; v <= n; ++v)
    witness[v - 1] = pre[v] ? pre[v] : lambda[sigma[v]];
  return Coloring(g, std::move(witness));
}

ClusterSolveResult solve_mhv_cluster(const ColoredGraph& g,
                                     std::optional<std::set<Vertex>> s,
                                     bool parallel) {
  std::set<Vertex> modulator =
      s ? *std::move(s) : find_cluster_modulator(g.graph());
  if (s && !is_cluster_graph(g.graph(), modulator))
    throw ContractViolation("given set is not a cluster modulator");

  const std::vector<Vertex> mod(modulator.begin(), modulator.end());
  const int d = static_cast<int>(mod.size());
  const unsigned long long bell = bell_number(d);
  const unsigned long long subsets = 1ULL << d;

  struct Best {
    long long count = -1;
    unsigned long long index = 0;  // subset * bell + partition rank
    std::optional<Coloring> witness;
  };

  auto run_subset = [&](unsigned long long h_mask) {
    Best local;
    ClusterGuess guess;
    for (int i = 0; i < d; ++i)
      if (h_mask & (1ULL << i)) guess.happy_subset.insert(mod[i]);
    std::vector<int> rgs = first_rgs(d);
    unsigned long long rank = 0;
    while (true) {
      guess.partition.clear();
      int blocks = d == 0 ? 0 : 1 + *std::max_element(rgs.begin(), rgs.end());
      guess.partition.resize(blocks);
      for (int i = 0; i < d; ++i) guess.partition[rgs[i]].insert(mod[i]);
      auto coloring = find_coloring(g, modulator, guess);
      if (coloring) {
        long long count =
            static_cast<long long>(happy_vertices(g, *coloring).size());
        if (count > local.count) {
          local.count = count;
          local.index = h_mask * bell + rank;
          local.witness = std::move(coloring);
        }
      }
      ++rank;
      if (!next_rgs(rgs)) break;
    }
    return local;
  };

  Best best;
  auto merge = [&](Best& into, Best&& from) {
    if (from.count > into.count ||
        (from.count == into.count && from.witness && from.index < into.index))
      into = std::move(from);
  };

#ifdef _OPENMP
  if (parallel && subsets > 1) {
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(dynamic) nowait
      for (long long h = 0; h < static_cast<long long>(subsets); ++h)
        merge(local, run_subset(static_cast<unsigned long long>(h)));
#pragma omp critical
      merge(best, std::move(local));
    }
  } else
#endif
  {
    for (unsigned long long h = 0; h < subsets; ++h)
      merge(best, run_subset(h));
  }

  if (!best.witness) throw std::logic_error("no guess produced a coloring");
  return {best.count, *best.witness, modulator, subsets * bell};
}

}  // namespace happy
