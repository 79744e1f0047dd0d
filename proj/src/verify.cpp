#include "happy/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "happy/cluster_fpt.hpp"
#include "happy/gadgets.hpp"
#include "happy/graph_classes.hpp"
#include "happy/io.hpp"
#include "happy/kernel.hpp"
#include "happy/multiway.hpp"
#include "happy/oracles.hpp"
#include "happy/reference.hpp"

namespace happy {

namespace {

struct Rng {
  std::mt19937 eng;
  explicit Rng(unsigned seed) : eng(seed) {}
  int below(int n) { return static_cast<int>(eng() % static_cast<unsigned>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return eng() % 1000000 < static_cast<unsigned>(p * 1000000); }
};

}  // namespace

ColoredGraph random_colored_graph(unsigned seed, int max_n, int max_ell,
                                  double edge_prob, double precolor_prob) {
  Rng rng(seed);
  int n = rng.between(1, max_n);
  int ell = rng.between(1, max_ell);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.chance(edge_prob)) edges.push_back({u, v});
  std::map<Vertex, Color> pre;
  for (Vertex v = 1; v <= n; ++v)
    if (rng.chance(precolor_prob)) pre[v] = rng.between(1, ell);
  return ColoredGraph(Graph(n, std::move(edges)), ell, std::move(pre));
}

WExpression random_wexpr(unsigned seed, int num_vertices, int width) {
  Rng rng(seed);
  std::vector<WExpression> forest;
  for (Vertex v = 1; v <= num_vertices; ++v)
    forest.push_back(WExpression::introduce(v, rng.between(1, width)));
  int extra_ops = rng.between(num_vertices, 3 * num_vertices);
  while (forest.size() > 1 || extra_ops > 0) {
    int move = rng.below(3);
    if (forest.size() == 1 && move == 0) move = 1 + rng.below(2);
    if (move == 0) {  // union two random trees
      int a = rng.below(static_cast<int>(forest.size()));
      int b = rng.below(static_cast<int>(forest.size()));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      WExpression rhs = std::move(forest[b]);
      forest.erase(forest.begin() + b);
      forest[a] =
          WExpression::disjoint_union(std::move(forest[a]), std::move(rhs));
    } else if (move == 1) {
      int a = rng.below(static_cast<int>(forest.size()));
      int i = rng.between(1, width), j = rng.between(1, width);
      forest[a] = WExpression::rename(i, j, std::move(forest[a]));
      --extra_ops;
    } else {
      if (width < 2) continue;
      int a = rng.below(static_cast<int>(forest.size()));
      int i = rng.between(1, width), j = rng.between(1, width);
      if (i == j) continue;
      forest[a] = WExpression::join_edges(i, j, std::move(forest[a]));
      --extra_ops;
    }
  }
  return std::move(forest.front());
}

VerifyResult verify_cluster_fpt(int instances, unsigned seed0,
                                int max_modulator) {
  VerifyResult out;
  out.suite = "cluster-fpt";
  unsigned seed = seed0;
  int accepted = 0, attempts = 0;
  while (accepted < instances && attempts < instances * 100) {
    ++attempts;
    ColoredGraph g = random_colored_graph(seed++, 10, 4, 0.25);
    std::set<Vertex> mod = find_cluster_modulator(g.graph());
    if (static_cast<int>(mod.size()) > max_modulator) continue;
    ++accepted;
    ++out.cases;

    auto brute = brute_mhv(g);
    auto fpt = solve_mhv_cluster(g, mod);
    if (fpt.optimum != brute.optimum) {
      std::ostringstream msg;
      msg << "seed " << seed - 1 << ": cluster-fpt " << fpt.optimum
          << " != brute " << brute.optimum;
      out.fail(msg.str());
      continue;
    }
    long long recount =
        static_cast<long long>(happy_vertices(g, fpt.witness).size());
    if (recount != fpt.optimum)
      out.fail("seed " + std::to_string(seed - 1) + ": witness recount differs");
    int d = static_cast<int>(mod.size());
    if (fpt.guesses != (1ULL << d) * bell_number(d))
      out.fail("seed " + std::to_string(seed - 1) + ": guess count mismatch");
    auto serial = solve_mhv_cluster(g, mod, /*parallel=*/false);
    if (serial.optimum != fpt.optimum || !(serial.witness == fpt.witness))
      out.fail("seed " + std::to_string(seed - 1) +
               ": parallel and serial runs disagree");
  }
  if (accepted < instances) out.fail("could not generate enough instances");
  return out;
}

VerifyResult verify_gmc_correspondence(int instances, unsigned seed0) {
  VerifyResult out;
  out.suite = "gmc";
  for (int i = 0; i < instances; ++i) {
    unsigned seed = seed0 + static_cast<unsigned>(i);
    ColoredGraph g = random_colored_graph(seed, 9, 4);
    ++out.cases;
    auto reduction = mhv_to_gmc(g, 0);
    long long h = static_cast<long long>(potentially_happy_sets(g).all.size());
    auto cut = brute_gmc(reduction->instance);
    auto brute = brute_mhv(g);
    if (brute.optimum != h - cut.min_cut) {
      std::ostringstream msg;
      msg << "seed " << seed << ": max-happy " << brute.optimum << " != " << h
          << " - " << cut.min_cut;
      out.fail(msg.str());
    }
  }
  return out;
}

namespace {

long long binom2(long long x) { return x * (x - 1) / 2; }

// Exact optimum of a compression output: the subdivision vertices are
// isolated once the original vertices and the gadget pair are removed.
long long compressed_optimum(const MhvCompression& comp) {
  std::set<Vertex> modulator;
  for (size_t i = 1; i <= comp.happy_ids.size(); ++i)
    modulator.insert(static_cast<Vertex>(i));
  modulator.insert(comp.graph.vertex_count() - 1);
  modulator.insert(comp.graph.vertex_count());
  return exact_mhv_with_modulator(comp.graph, modulator);
}

}  // namespace

VerifyResult verify_kernels(int instances, unsigned seed0) {
  VerifyResult out;
  out.suite = "kernels";
  for (int i = 0; i < instances; ++i) {
    unsigned seed = seed0 + static_cast<unsigned>(i);
    ColoredGraph g = random_colored_graph(seed, 9, 4);
    const int n = g.vertex_count();
    ++out.cases;
    long long opt_in = brute_mhv(g).optimum;
    long long h = static_cast<long long>(potentially_happy_sets(g).all.size());
    std::set<Vertex> s = clique_modulator_2approx(g.graph());
    auto tag = [&](const char* what) {
      return "seed " + std::to_string(seed) + ": " + what;
    };

    {
      auto lin = linear_kernel(g, 0, s);
      long long opt_out = brute_mhv(lin.graph).optimum;
      for (long long k = 0; k <= n; ++k)
        if ((opt_in >= k) != (opt_out >= k + lin.k))
          out.fail(tag("linear kernel changes the answer"));
      long long bound =
          2 * h + 3 * static_cast<long long>(s.size()) +
          3 * binom2(static_cast<long long>(s.size())) + 2;
      if (lin.graph.vertex_count() > bound)
        out.fail(tag("linear kernel exceeds its size bound"));
    }

    {
      auto cub = cubic_kernel(g, 0, s);
      long long opt_out = brute_mhv(cub.graph).optimum;
      for (long long k = 0; k <= n; ++k)
        if ((opt_in >= k) != (opt_out >= k + cub.k))
          out.fail(tag("cubic kernel changes the answer"));
      long long d = cub.extended_modulator_size;
      long long pot_bound = d * d + d * (d + 1) * (d + 1);
      if (cub.clique_pot_happy_after_rules > pot_bound)
        out.fail(tag("cubic kernel: too many potentially happy clique vertices"));
      long long size_bound =
          2 * (pot_bound + d) + 3 * d + 3 * binom2(d) + 2;
      if (cub.graph.vertex_count() > size_bound)
        out.fail(tag("cubic kernel exceeds its size bound"));
      auto replayed = replay_trace(g, 0, cub.trace);
      if (!(replayed.first == cub.graph) || replayed.second != cub.k)
        out.fail(tag("cubic trace replay differs from the pipeline output"));
    }

    {
      auto comp = gmc_compress_to_mhv(g, 0);
      long long opt_out = compressed_optimum(comp);
      for (long long k = 0; k <= n; ++k)
        if ((opt_in >= k) != (opt_out >= k + comp.k))
          out.fail(tag("compression changes the answer"));
      if (comp.graph.vertex_count() > binom2(h) + h + 2)
        out.fail(tag("compression exceeds its size bound"));
    }
  }
  return out;
}

VerifyResult verify_nmc_cw(int expressions, unsigned seed0) {
  VerifyResult out;
  out.suite = "nmc-cw";
  for (int i = 0; i < expressions; ++i) {
    unsigned seed = seed0 + static_cast<unsigned>(i);
    Rng rng(seed ^ 0x9e3779b9u);
    int n = rng.between(2, 8);
    int w = rng.between(1, 3);
    WExpression expr = random_wexpr(seed, n, w);
    ++out.cases;

    auto ids = expr.vertex_ids();
    std::set<Vertex> terminals;
    int want = rng.between(1, std::min(3, n));
    while (static_cast<int>(terminals.size()) < want)
      terminals.insert(ids[rng.below(static_cast<int>(ids.size()))]);

    auto result = solve_nmc_cw(expr, terminals, 0);
    LabeledGraph lg = eval_wexpr(expr);
    std::vector<Vertex> order;
    Graph graph = lg.to_graph(&order);
    std::set<Vertex> local_terms;
    for (Vertex t : terminals) {
      auto it = std::lower_bound(order.begin(), order.end(), t);
      local_terms.insert(static_cast<Vertex>(it - order.begin()) + 1);
    }
    auto brute = brute_nmc(graph, local_terms);

    bool both_inf = !result.min_cut && !brute.min_cut;
    bool equal = result.min_cut && brute.min_cut &&
                 *result.min_cut == *brute.min_cut;
    if (!both_inf && !equal) {
      std::ostringstream msg;
      msg << "seed " << seed << ": dp "
          << (result.min_cut ? std::to_string(*result.min_cut) : "inf")
          << " != brute "
          << (brute.min_cut ? std::to_string(*brute.min_cut) : "inf");
      out.fail(msg.str());
    }
    unsigned long long bound = 1;
    for (int j = 0; j < expr.width(); ++j) bound *= expr.width() + 3;
    if (result.max_states > bound)
      out.fail("seed " + std::to_string(seed) + ": state table exceeds (w+3)^w");
  }
  return out;
}

namespace {

// All partitions of [n] into parts of size >= 2, as clique lists.
void cliques_partitions(int n,
                        std::vector<std::vector<std::set<Vertex>>>& out) {
  std::vector<int> rgs(n, 0);
  while (true) {
    int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::set<Vertex>> parts(blocks);
    for (int i = 0; i < n; ++i) parts[rgs[i]].insert(i + 1);
    bool ok = true;
    for (const auto& part : parts)
      if (part.size() < 2) ok = false;
    if (ok) out.push_back(std::move(parts));
    if (!next_rgs(rgs)) break;
  }
}

struct GadgetChecks {
  VerifyResult* out;

  void check_rmis(const RmisInstance& inst) {
    ++out->cases;
    bool src_yes = brute_rmis(inst).has_value();
    const long long n = inst.graph.vertex_count();
    const long long m = inst.graph.edge_count();
    const long long k = inst.k, r = inst.r;

    auto mhv = gen_rmis_to_mhv(inst);
    if (mhv.k_prime != k * r) out->fail("rmis-mhv threshold formula");
    check_equiv_mhv(mhv, src_yes, "rmis-mhv");
    check_structure(mhv, is_disjoint_p3s, "rmis-mhv selector deletion");

    auto path = gen_rmis_to_mhe(inst, MheVariant::kPath);
    if (path.k_prime != k * r + (m + k * r) + (3 * k + 2 * n) * m)
      out->fail("rmis-mhe path threshold formula");
    check_equiv_mhe(path, src_yes, "rmis-mhe-path");
    check_structure(path, is_disjoint_p3s, "rmis-mhe-path selector deletion");

    auto tri = gen_rmis_to_mhe(inst, MheVariant::kTriangle);
    if (tri.k_prime != path.k_prime + n * m)
      out->fail("rmis-mhe triangle threshold formula");
    check_equiv_mhe(tri, src_yes, "rmis-mhe-triangle");
    check_structure(tri, is_disjoint_triangles,
                    "rmis-mhe-triangle selector deletion");
  }

  void check_crbds(const CrbdsInstance& inst) {
    ++out->cases;
    bool src_yes = brute_crbds(inst).has_value();

    auto mhv = gen_crbds_to_mhv(inst);
    if (mhv.k_prime != inst.num_blue) out->fail("crbds-mhv threshold formula");
    check_equiv_mhv(mhv, src_yes, "crbds-mhv");
    check_structure(mhv, is_disjoint_stars, "crbds-mhv selector deletion");

    auto star = gen_crbds_to_mhe(inst, CrbdsMheVariant::kStar);
    if (star.k_prime != static_cast<long long>(2 + inst.k) * inst.num_blue)
      out->fail("crbds-mhe threshold formula");
    check_equiv_mhe(star, src_yes, "crbds-mhe-star");
    check_structure(star, is_disjoint_stars, "crbds-mhe-star selector deletion");

    auto cluster = gen_crbds_to_mhe(inst, CrbdsMheVariant::kCluster);
    if (cluster.k_prime != star.k_prime)
      out->fail("crbds-mhe cluster threshold formula");
    check_equiv_mhe(cluster, src_yes, "crbds-mhe-cluster");
    check_structure(cluster,
                    [](const Graph& g) { return is_cluster_graph(g); },
                    "crbds-mhe-cluster selector deletion");
  }

  void check_equiv_mhv(const GadgetInstance& gi, bool src_yes,
                       const char* name) {
    std::set<Vertex> mod(gi.selectors.begin(), gi.selectors.end());
    long long opt = exact_mhv_with_modulator(gi.graph, mod);
    if ((opt >= gi.k_prime) != src_yes)
      out->fail(std::string(name) + ": equivalence fails (target opt " +
                std::to_string(opt) + ", threshold " +
                std::to_string(gi.k_prime) + ")");
  }

  void check_equiv_mhe(const GadgetInstance& gi, bool src_yes,
                       const char* name) {
    std::set<Vertex> mod(gi.selectors.begin(), gi.selectors.end());
    long long opt = exact_mhe_with_modulator(gi.graph, mod);
    if ((opt >= gi.k_prime) != src_yes)
      out->fail(std::string(name) + ": equivalence fails (target opt " +
                std::to_string(opt) + ", threshold " +
                std::to_string(gi.k_prime) + ")");
  }

  template <typename Recognizer>
  void check_structure(const GadgetInstance& gi, const Recognizer& recognize,
                       const char* name) {
    std::set<Vertex> selectors(gi.selectors.begin(), gi.selectors.end());
    Graph rest = delete_vertices(gi.graph.graph(), selectors);
    if (!recognize(rest)) out->fail(std::string(name) + ": structure check");
  }
};

}  // namespace

VerifyResult verify_gadgets(int max_rmis_n) {
  VerifyResult out;
  out.suite = "gadgets";
  GadgetChecks checks{&out};

  // Every RMIS instance up to max_rmis_n vertices: a partition into cliques
  // of size >= 2 plus any cross-edge set making the graph regular.
  for (int n = 2; n <= max_rmis_n; ++n) {
    std::vector<std::vector<std::set<Vertex>>> partitions;
    cliques_partitions(n, partitions);
    for (const auto& parts : partitions) {
      std::vector<int> clique_of(n + 1, 0);
      for (size_t ci = 0; ci < parts.size(); ++ci)
        for (Vertex v : parts[ci]) clique_of[v] = static_cast<int>(ci);
      std::vector<Edge> cross;
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
          if (clique_of[u] != clique_of[v]) cross.push_back({u, v});

      for (unsigned long long mask = 0; mask < (1ULL << cross.size());
           ++mask) {
        std::vector<int> degree(n + 1, 0);
        for (size_t ci = 0; ci < parts.size(); ++ci)
          for (Vertex v : parts[ci])
            degree[v] = static_cast<int>(parts[ci].size()) - 1;
        std::vector<Edge> edges;
        for (size_t ci = 0; ci < parts.size(); ++ci) {
          std::vector<Vertex> vs(parts[ci].begin(), parts[ci].end());
          for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
              edges.push_back({vs[a], vs[b]});
        }
        for (size_t e = 0; e < cross.size(); ++e) {
          if (!(mask & (1ULL << e))) continue;
          edges.push_back(cross[e]);
          ++degree[cross[e].first];
          ++degree[cross[e].second];
        }
        bool regular = true;
        for (Vertex v = 2; v <= n; ++v)
          if (degree[v] != degree[1]) {
            regular = false;
            break;
          }
        if (!regular) continue;

        RmisInstance inst;
        inst.graph = Graph(n, std::move(edges));
        inst.k = static_cast<int>(parts.size());
        inst.cliques = parts;
        inst.r = degree[1];
        checks.check_rmis(inst);
      }
    }
  }

  // Every CRBDS instance with |R| <= 4, |B| <= 3 meeting the preconditions:
  // every color class has >= 2 red vertices, every blue degree >= 2.
  for (int nr = 2; nr <= 4; ++nr) {
    for (int k = 1; 2 * k <= nr; ++k) {
      std::vector<Color> coloring(nr, 1);
      while (true) {
        std::vector<int> class_size(k + 1, 0);
        for (Color c : coloring) ++class_size[c];
        bool ok = true;
        for (Color c = 1; c <= k; ++c)
          if (class_size[c] < 2) ok = false;
        if (ok) {
          for (int nb = 1; nb <= 3; ++nb) {
            const int slots = nr * nb;
            for (unsigned long long mask = 0; mask < (1ULL << slots); ++mask) {
              CrbdsInstance inst;
              inst.num_red = nr;
              inst.num_blue = nb;
              inst.k = k;
              inst.coloring = coloring;
              std::vector<int> bdeg(nb + 1, 0);
              for (int s = 0; s < slots; ++s) {
                if (!(mask & (1ULL << s))) continue;
                int r = s / nb + 1, b = s % nb + 1;
                inst.edges.emplace_back(r, b);
                ++bdeg[b];
              }
              bool degrees_ok = true;
              for (int b = 1; b <= nb; ++b)
                if (bdeg[b] < 2) degrees_ok = false;
              if (!degrees_ok) continue;
              std::sort(inst.edges.begin(), inst.edges.end());
              checks.check_crbds(inst);
            }
          }
        }
        // next coloring in k^nr counter order
        int pos = nr - 1;
        while (pos >= 0 && coloring[pos] == k) coloring[pos--] = 1;
        if (pos < 0) break;
        ++coloring[pos];
      }
    }
  }

  // Random generators: determinism per seed and downstream validity.
  for (unsigned seed = 1; seed <= 5; ++seed) {
    RmisInstance a = gen_random_rmis(2, 2 + seed % 2, 1 + seed % 2, seed);
    RmisInstance b = gen_random_rmis(2, 2 + seed % 2, 1 + seed % 2, seed);
    ++out.cases;
    if (serialize_rmis(a) != serialize_rmis(b))
      out.fail("random rmis not deterministic");
    checks.check_rmis(a);

    CrbdsInstance c = gen_random_crbds(2, 2, 2, 0.5, seed);
    CrbdsInstance d = gen_random_crbds(2, 2, 2, 0.5, seed);
    ++out.cases;
    if (serialize_crbds(c) != serialize_crbds(d))
      out.fail("random crbds not deterministic");
    checks.check_crbds(c);
  }
  return out;
}

VerifyResult verify_modulators(int graphs, unsigned seed0) {
  VerifyResult out;
  out.suite = "modulators";
  for (int i = 0; i < graphs; ++i) {
    unsigned seed = seed0 + static_cast<unsigned>(i);
    ColoredGraph cg = random_colored_graph(seed, 8, 2, 0.45);
    const Graph& g = cg.graph();
    ++out.cases;

    std::set<Vertex> cluster_mod = find_cluster_modulator(g);
    if (!is_cluster_graph(g, cluster_mod))
      out.fail("seed " + std::to_string(seed) + ": cluster modulator invalid");
    if (static_cast<int>(cluster_mod.size()) !=
        exact_min_cluster_modulator_size(g))
      out.fail("seed " + std::to_string(seed) + ": cluster modulator not minimum");

    std::set<Vertex> clique_mod = clique_modulator_2approx(g);
    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
      if (!clique_mod.count(v)) rest.push_back(v);
    for (size_t a = 0; a < rest.size(); ++a)
      for (size_t b = a + 1; b < rest.size(); ++b)
        if (!g.adjacent(rest[a], rest[b]))
          out.fail("seed " + std::to_string(seed) + ": 2-approx not a modulator");
    size_t exact = exact_clique_modulator(g).size();
    if (clique_mod.size() > 2 * exact)
      out.fail("seed " + std::to_string(seed) + ": 2-approx exceeds twice optimum");
  }
  return out;
}

VerifyResult verify_io_roundtrip(int per_format, unsigned seed0) {
  VerifyResult out;
  out.suite = "io";
  for (int i = 0; i < per_format; ++i) {
    unsigned seed = seed0 + static_cast<unsigned>(i);
    Rng rng(seed * 7919u + 13u);

    {
      ColoredGraph g = random_colored_graph(seed, 12, 5);
      ++out.cases;
      if (!(parse_happy(serialize_happy(g)) == g))
        out.fail("happy round-trip, seed " + std::to_string(seed));
    }
    {
      ColoredGraph base = random_colored_graph(seed ^ 0x5bd1u, 10, 3);
      GmcInstance inst;
      inst.graph = base.graph();
      int groups = rng.between(0, 3);
      inst.groups.resize(groups);
      for (Vertex v = 1; v <= inst.graph.vertex_count() && groups > 0; ++v)
        if (rng.chance(0.3)) inst.groups[rng.below(groups)].insert(v);
      ++out.cases;
      if (!(parse_gmc(serialize_gmc(inst)) == inst))
        out.fail("gmc round-trip, seed " + std::to_string(seed));
    }
    {
      int k = rng.between(2, 3), q = rng.between(2, 3);
      int x = rng.below(2);
      if ((k * q) % 2 == 1) x = 0;  // perfect matchings need an even order
      RmisInstance inst = gen_random_rmis(k, q, x, seed);
      ++out.cases;
      if (!(parse_rmis(serialize_rmis(inst)) == inst))
        out.fail("rmis round-trip, seed " + std::to_string(seed));
    }
    {
      CrbdsInstance inst = gen_random_crbds(rng.between(1, 2), 2,
                                            rng.between(1, 3), 0.5, seed);
      ++out.cases;
      if (!(parse_crbds(serialize_crbds(inst)) == inst))
        out.fail("crbds round-trip, seed " + std::to_string(seed));
    }
    {
      WExpression e = random_wexpr(seed, 1 + rng.below(6), 1 + rng.below(3));
      ++out.cases;
      if (!(parse_wexpr(serialize_wexpr(e)) == e))
        out.fail("wexpr round-trip, seed " + std::to_string(seed));
    }
  }
  return out;
}

}  // namespace happy
