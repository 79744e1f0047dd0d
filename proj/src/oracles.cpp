#include "happy/oracles.hpp"

#include <algorithm>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace happy {

namespace {

// ell^count, or nullopt on overflow past limit.
std::optional<unsigned long long> checked_pow(unsigned long long base,
                                              int count,
                                              unsigned long long limit) {
  unsigned long long total = 1;
  for (int i = 0; i < count; ++i) {
    if (base != 0 && total > limit / base) return std::nullopt;
    total *= base;
  }
  return total;
}

void decode_mixed_radix(unsigned long long index, int base,
                        std::vector<int>& digits) {
  for (int pos = static_cast<int>(digits.size()) - 1; pos >= 0; --pos) {
    digits[pos] = static_cast<int>(index % base);
    index /= base;
  }
}

// Advances digits as a counter with the last position least significant.
void increment_mixed_radix(std::vector<int>& digits, int base) {
  for (int pos = static_cast<int>(digits.size()) - 1; pos >= 0; --pos) {
    if (++digits[pos] < base) return;
    digits[pos] = 0;
  }
}

struct RangeBest {
  long long score = -1;
  unsigned long long index = 0;
};

// Core enumeration kernel shared by the vertex and edge oracles. Scans
// assignment indices [lo, hi) and keeps the best score with the smallest
// index. The serial reference path and the OpenMP path both reduce to this.
template <typename Score>
RangeBest scan_range(unsigned long long lo, unsigned long long hi, int ell,
                     const std::vector<Vertex>& uncolored,
                     std::vector<Color>& assignment, const Score& score) {
  RangeBest best;
  std::vector<int> digits(uncolored.size(), 0);
  decode_mixed_radix(lo, ell, digits);
  for (unsigned long long idx = lo; idx < hi; ++idx) {
    for (size_t j = 0; j < uncolored.size(); ++j)
      assignment[uncolored[j] - 1] = digits[j] + 1;
    long long s = score(assignment);
    if (s > best.score) {
      best.score = s;
      best.index = idx;
    }
    increment_mixed_radix(digits, ell);
  }
  return best;
}

template <typename Score>
BruteColoringResult brute_optimize(const ColoredGraph& g,
                                   const OracleOptions& opts,
                                   const Score& score) {
  const int ell = g.num_colors();
  std::vector<Vertex> uncolored;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!g.precolor(v)) uncolored.push_back(v);

  auto total = checked_pow(ell, static_cast<int>(uncolored.size()), opts.budget);
  if (!total)
    throw BudgetExceeded("too large for oracle: " +
                         std::to_string(ell) + "^" +
                         std::to_string(uncolored.size()) + " colorings");

  std::vector<Color> base(g.vertex_count(), 1);
  for (const auto& [v, col] : g.precoloring()) base[v - 1] = col;

  RangeBest best;
#ifdef _OPENMP
  if (opts.parallel && *total > 4096) {
    const unsigned long long chunk = 2048;
    const unsigned long long chunks = (*total + chunk - 1) / chunk;
#pragma omp parallel
    {
      RangeBest local;
      std::vector<Color> assignment = base;
#pragma omp for schedule(static) nowait
      for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        unsigned long long lo = static_cast<unsigned long long>(c) * chunk;
        unsigned long long hi = std::min(lo + chunk, *total);
        RangeBest r = scan_range(lo, hi, ell, uncolored, assignment, score);
        if (r.score > local.score ||
            (r.score == local.score && r.index < local.index))
          local = r;
      }
#pragma omp critical
      {
        if (local.score > best.score ||
            (local.score == best.score && local.index < best.index))
          best = local;
      }
    }
  } else
#endif
  {
    std::vector<Color> assignment = base;
    best = scan_range(0, *total, ell, uncolored, assignment, score);
  }

  std::vector<int> digits(uncolored.size(), 0);
  decode_mixed_radix(best.index, ell, digits);
  std::vector<Color> witness = base;
  for (size_t j = 0; j < uncolored.size(); ++j)
    witness[uncolored[j] - 1] = digits[j] + 1;
  return {best.score, Coloring(g, std::move(witness))};
}

// Enumerates subsets of `pool` by ascending size, lexicographic within a
// size. Returns the first subset accepted by `feasible`.
template <typename Feasible>
std::optional<std::set<Vertex>> first_feasible_subset(
    const std::vector<Vertex>& pool, const Feasible& feasible) {
  const int n = static_cast<int>(pool.size());
  std::vector<int> pick;
  for (int size = 0; size <= n; ++size) {
    pick.assign(size, 0);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::set<Vertex> subset;
      for (int i : pick) subset.insert(pool[i]);
      if (feasible(subset)) return subset;
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return std::nullopt;
}

// Component ids after deleting `removed`, or -1.
std::vector<int> components_after_deletion(const Graph& g,
                                           const std::set<Vertex>& removed) {
  const int n = g.vertex_count();
  std::vector<int> comp(n + 1, -1);
  int next = 0;
  for (Vertex start = 1; start <= n; ++start) {
    if (comp[start] != -1 || removed.count(start)) continue;
    comp[start] = next;
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (comp[u] == -1 && !removed.count(u)) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return comp;
}

void check_subset_budget(int n, const OracleOptions& opts) {
  if (n >= 63 || (1ULL << n) > opts.budget)
    throw BudgetExceeded("too large for oracle: 2^" + std::to_string(n) +
                         " subsets");
}

}  // namespace

void validate_rmis(const RmisInstance& inst) {
  if (inst.k != static_cast<int>(inst.cliques.size()))
    throw InvalidInstance("clique count mismatch");
  std::vector<char> seen(inst.graph.vertex_count() + 1, 0);
  for (const auto& clique : inst.cliques) {
    for (Vertex v : clique) {
      if (!inst.graph.has_vertex(v)) throw InvalidInstance("clique vertex out of range");
      if (seen[v]++) throw InvalidInstance("cliques are not disjoint");
    }
    for (auto it = clique.begin(); it != clique.end(); ++it)
      for (auto jt = std::next(it); jt != clique.end(); ++jt)
        if (!inst.graph.adjacent(*it, *jt))
          throw InvalidInstance("part does not induce a clique");
  }
  for (Vertex v = 1; v <= inst.graph.vertex_count(); ++v) {
    if (!seen[v]) throw InvalidInstance("vertex not covered by any clique");
    if (inst.graph.degree(v) != inst.r)
      throw InvalidInstance("graph is not " + std::to_string(inst.r) +
                            "-regular");
  }
}

void validate_crbds(const CrbdsInstance& inst) {
  if (inst.num_red < 0 || inst.num_blue < 0 || inst.k < 1)
    throw InvalidInstance("bad crbds header");
  if (static_cast<int>(inst.coloring.size()) != inst.num_red)
    throw InvalidInstance("coloring must cover every red vertex");
  for (Color c : inst.coloring)
    if (c < 1 || c > inst.k) throw InvalidInstance("red color out of range");
  for (auto [r, b] : inst.edges)
    if (r < 1 || r > inst.num_red || b < 1 || b > inst.num_blue)
      throw InvalidInstance("edge endpoint out of range");
  if (!std::is_sorted(inst.edges.begin(), inst.edges.end()))
    throw InvalidInstance("edges not sorted");
  if (std::adjacent_find(inst.edges.begin(), inst.edges.end()) !=
      inst.edges.end())
    throw InvalidInstance("duplicate edge");
}

BruteColoringResult brute_mhv(const ColoredGraph& g,
                              const OracleOptions& opts) {
  const Graph& graph = g.graph();
  return brute_optimize(g, opts, [&](const std::vector<Color>& a) {
    long long happy = 0;
    for (Vertex v = 1; v <= graph.vertex_count(); ++v) {
      bool ok = true;
      for (Vertex u : graph.neighbors(v))
        if (a[u - 1] != a[v - 1]) {
          ok = false;
          break;
        }
      happy += ok;
    }
    return happy;
  });
}

BruteColoringResult brute_mhe(const ColoredGraph& g,
                              const OracleOptions& opts) {
  const auto& edges = g.graph().edges();
  return brute_optimize(g, opts, [&](const std::vector<Color>& a) {
    long long happy = 0;
    for (const auto& [u, v] : edges) happy += a[u - 1] == a[v - 1];
    return happy;
  });
}

BruteCutResult brute_gmc(const GmcInstance& inst, const OracleOptions& opts) {
  validate_gmc(inst);
  const int n = inst.graph.vertex_count();
  check_subset_budget(n, opts);

  std::vector<Vertex> pool;
  for (Vertex v = 1; v <= n; ++v) pool.push_back(v);
  auto separated = [&](const std::set<Vertex>& removed) {
    auto comp = components_after_deletion(inst.graph, removed);
    std::vector<int> owner;  // component -> group index
    owner.assign(static_cast<size_t>(n) + 1, -1);
    for (size_t gi = 0; gi < inst.groups.size(); ++gi) {
      for (Vertex t : inst.groups[gi]) {
        if (removed.count(t)) continue;
        int c = comp[t];
        if (owner[c] == -1)
          owner[c] = static_cast<int>(gi);
        else if (owner[c] != static_cast<int>(gi))
          return false;
      }
    }
    return true;
  };
  auto witness = first_feasible_subset(pool, separated);
  // Deleting every vertex always separates, so a witness exists.
  return {static_cast<int>(witness->size()), *witness};
}

BruteNmcResult brute_nmc(const Graph& g, const std::set<Vertex>& terminals,
                         const OracleOptions& opts) {
  for (Vertex t : terminals)
    if (!g.has_vertex(t)) throw ContractViolation("terminal out of range");
  for (Vertex t : terminals)
    for (Vertex u : g.neighbors(t))
      if (u != t && terminals.count(u)) return {std::nullopt, {}};

  std::vector<Vertex> pool;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!terminals.count(v)) pool.push_back(v);
  check_subset_budget(static_cast<int>(pool.size()), opts);

  auto separated = [&](const std::set<Vertex>& removed) {
    auto comp = components_after_deletion(g, removed);
    std::set<int> used;
    for (Vertex t : terminals)
      if (!used.insert(comp[t]).second) return false;
    return true;
  };
  auto witness = first_feasible_subset(pool, separated);
  if (!witness) return {std::nullopt, {}};
  return {static_cast<int>(witness->size()), *witness};
}

namespace {

// Mixed-radix scan over one choice per part; parts with no candidates make
// the search empty.
std::optional<std::set<Vertex>> first_transversal(
    const std::vector<std::vector<Vertex>>& parts, const OracleOptions& opts,
    const std::function<bool(const std::vector<Vertex>&)>& accept) {
  unsigned long long total = 1;
  for (const auto& part : parts) {
    if (part.empty()) return std::nullopt;
    if (total > opts.budget / part.size())
      throw BudgetExceeded("too large for oracle: transversal space");
    total *= part.size();
  }
  std::vector<size_t> pick(parts.size(), 0);
  std::vector<Vertex> chosen(parts.size());
  for (unsigned long long idx = 0; idx < total; ++idx) {
    for (size_t i = 0; i < parts.size(); ++i) chosen[i] = parts[i][pick[i]];
    if (accept(chosen)) return std::set<Vertex>(chosen.begin(), chosen.end());
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
      if (++pick[i] < parts[i].size()) break;
      pick[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::set<Vertex>> brute_rmis(const RmisInstance& inst,
                                           const OracleOptions& opts) {
  validate_rmis(inst);
  std::vector<std::vector<Vertex>> parts;
  for (const auto& clique : inst.cliques)
    parts.emplace_back(clique.begin(), clique.end());
  return first_transversal(parts, opts, [&](const std::vector<Vertex>& sel) {
    for (size_t i = 0; i < sel.size(); ++i)
      for (size_t j = i + 1; j < sel.size(); ++j)
        if (inst.graph.adjacent(sel[i], sel[j])) return false;
    return true;
  });
}

std::optional<std::set<Vertex>> brute_crbds(const CrbdsInstance& inst,
                                            const OracleOptions& opts) {
  validate_crbds(inst);
  std::vector<std::vector<Vertex>> classes(inst.k);
  for (Vertex r = 1; r <= inst.num_red; ++r)
    classes[inst.coloring[r - 1] - 1].push_back(r);

  std::vector<std::vector<Vertex>> blue_adj(inst.num_blue + 1);
  for (auto [r, b] : inst.edges) blue_adj[b].push_back(r);

  return first_transversal(classes, opts, [&](const std::vector<Vertex>& sel) {
    for (Vertex b = 1; b <= inst.num_blue; ++b) {
      bool dominated = false;
      for (Vertex r : blue_adj[b])
        if (std::find(sel.begin(), sel.end(), r) != sel.end()) {
          dominated = true;
          break;
        }
      if (!dominated) return false;
    }
    return true;
  });
}

}  // namespace happy
