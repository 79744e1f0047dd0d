#include "happy/kernel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace happy {

namespace {

// Mutable instance used by the kernelization pipeline. Vertex ids stay
// stable; only the final extraction renumbers.
struct Working {
  int ell = 1;
  std::vector<std::set<Vertex>> adj;  // 1-indexed
  std::vector<Color> pre;             // 0 = uncolored
  std::set<Vertex> mod;               // the (extended) modulator
  Vertex t1 = 0, t2 = 0;              // 0 while no gadget is attached
  long long k = 0;

  int n() const { return static_cast<int>(adj.size()) - 1; }

  void add_edge(Vertex u, Vertex v) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    adj[u].erase(v);
    adj[v].erase(u);
  }
};

Working make_working(const ColoredGraph& g, std::set<Vertex> mod,
                     long long k) {
  Working w;
  w.ell = g.num_colors();
  w.adj.assign(g.vertex_count() + 1, {});
  w.pre.assign(g.vertex_count() + 1, 0);
  for (const auto& [u, v] : g.graph().edges()) w.add_edge(u, v);
  for (const auto& [v, col] : g.precoloring()) w.pre[v] = col;
  w.mod = std::move(mod);
  w.k = k;
  return w;
}

void lift_colors(Working& w, KernelTrace* trace) {
  if (w.ell >= 2) return;
  w.ell = 2;
  if (trace) trace->steps.push_back({KernelRule::kLiftColors, {2}});
}

void attach_gadget(Working& w, KernelTrace* trace) {
  lift_colors(w, trace);
  w.t1 = w.n() + 1;
  w.t2 = w.n() + 2;
  w.adj.resize(w.adj.size() + 2);
  w.pre.resize(w.pre.size() + 2, 0);
  w.add_edge(w.t1, w.t2);
  w.pre[w.t1] = 1;
  w.pre[w.t2] = 2;
  w.mod.insert(w.t1);
  w.mod.insert(w.t2);
  if (trace)
    trace->steps.push_back({KernelRule::kAttachGadget, {w.t1, w.t2}});
}

void make_unhappy(Working& w, Vertex v) {
  w.add_edge(v, w.t1);
  w.add_edge(v, w.t2);
}

// Potentially happy vertices of the working instance.
std::set<Vertex> pot_happy(const Working& w) {
  std::set<Vertex> result;
  for (Vertex v = 1; v <= w.n(); ++v) {
    Color seen = w.pre[v];
    bool ok = true;
    for (Vertex u : w.adj[v]) {
      if (!w.pre[u]) continue;
      if (seen && seen != w.pre[u]) {
        ok = false;
        break;
      }
      seen = w.pre[u];
    }
    if (ok) result.insert(v);
  }
  return result;
}

// The per-color slices of the clique side: sets[0] holds the potentially
// happy clique vertices with no precolored closed neighbor, sets[i] those
// forced to color i.
std::vector<std::set<Vertex>> clique_slices(const Working& w,
                                            const std::set<Vertex>& happy) {
  std::vector<std::set<Vertex>> sets(w.ell + 1);
  for (Vertex v : happy) {
    if (w.mod.count(v)) continue;
    Color forced = w.pre[v];
    for (Vertex u : w.adj[v])
      if (w.pre[u]) forced = w.pre[u];  // all precolored neighbors agree
    sets[forced].insert(v);
  }
  return sets;
}

// T as in the linear kernel: potentially happy vertices, the modulator, one
// precolored witness per potentially happy vertex, one clique neighbor per
// modulator vertex, one common neighbor per modulator pair.
std::set<Vertex> linear_keep_set(const Working& w,
                                 const std::set<Vertex>& happy) {
  std::set<Vertex> keep = happy;
  keep.insert(w.mod.begin(), w.mod.end());
  for (Vertex v : happy) {
    for (Vertex u : w.adj[v])
      if (w.pre[u]) {
        keep.insert(u);
        break;
      }
  }
  for (Vertex s : w.mod) {
    for (Vertex u : w.adj[s])
      if (!w.mod.count(u)) {
        keep.insert(u);
        break;
      }
  }
  for (auto it = w.mod.begin(); it != w.mod.end(); ++it) {
    for (auto jt = std::next(it); jt != w.mod.end(); ++jt) {
      std::vector<Vertex> common;
      std::set_intersection(w.adj[*it].begin(), w.adj[*it].end(),
                            w.adj[*jt].begin(), w.adj[*jt].end(),
                            std::back_inserter(common));
      if (!common.empty()) keep.insert(common.front());
    }
  }
  return keep;
}

LinearKernelResult linear_extract(const Working& w, KernelTrace* trace) {
  std::set<Vertex> happy = pot_happy(w);
  std::set<Vertex> keep = linear_keep_set(w, happy);
  keep.erase(w.t1);  // the pair goes last in the output numbering
  keep.erase(w.t2);

  LinearKernelResult out;
  out.kept.assign(keep.begin(), keep.end());
  const int base = static_cast<int>(out.kept.size());
  out.t1 = base + 1;
  out.t2 = base + 2;

  std::map<Vertex, Vertex> local;
  for (int i = 0; i < base; ++i) local[out.kept[i]] = i + 1;

  std::set<Edge> edges;
  for (Vertex v : keep)
    for (Vertex u : w.adj[v]) {
      if (u == w.t1) edges.insert(make_edge(local[v], out.t1));
      else if (u == w.t2) edges.insert(make_edge(local[v], out.t2));
      else if (keep.count(u)) edges.insert(make_edge(local[v], local[u]));
    }
  edges.insert(make_edge(out.t1, out.t2));

  std::vector<int> targets;
  for (Vertex v : keep)
    if (!happy.count(v)) {
      targets.push_back(v);
      edges.insert(make_edge(local[v], out.t1));
      edges.insert(make_edge(local[v], out.t2));
    }

  std::map<Vertex, Color> pre;
  for (Vertex v : keep)
    if (w.pre[v]) pre[local[v]] = w.pre[v];
  pre[out.t1] = 1;
  pre[out.t2] = 2;

  out.graph =
      ColoredGraph(Graph(base + 2, {edges.begin(), edges.end()}),
                   std::max(w.ell, 2), std::move(pre));
  out.k = w.k;

  if (trace) {
    std::vector<int> args{base};
    args.insert(args.end(), out.kept.begin(), out.kept.end());
    args.push_back(w.t1);
    args.push_back(w.t2);
    args.insert(args.end(), targets.begin(), targets.end());
    trace->steps.push_back({KernelRule::kLinearExtract, std::move(args)});
  }
  return out;
}

void check_clique_modulator(const ColoredGraph& g, const std::set<Vertex>& s) {
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!s.count(v)) rest.push_back(v);
  for (size_t i = 0; i < rest.size(); ++i)
    for (size_t j = i + 1; j < rest.size(); ++j)
      if (!g.graph().adjacent(rest[i], rest[j]))
        throw ContractViolation("set is not a clique modulator");
}

}  // namespace

std::set<Vertex> clique_modulator_2approx(const Graph& g) {
  std::set<Vertex> cover;
  for (Vertex u = 1; u <= g.vertex_count(); ++u) {
    if (cover.count(u)) continue;
    for (Vertex v = u + 1; v <= g.vertex_count(); ++v) {
      if (cover.count(v) || g.adjacent(u, v)) continue;
      cover.insert(u);  // non-edge of g = edge of the complement
      cover.insert(v);
      break;
    }
  }
  return cover;
}

std::set<Vertex> exact_clique_modulator(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> rest;
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::set<Vertex> s;
      for (int i : pick) s.insert(i + 1);
      rest.clear();
      for (Vertex v = 1; v <= n; ++v)
        if (!s.count(v)) rest.push_back(v);
      bool clique = true;
      for (size_t i = 0; i < rest.size() && clique; ++i)
        for (size_t j = i + 1; j < rest.size(); ++j)
          if (!g.adjacent(rest[i], rest[j])) {
            clique = false;
            break;
          }
      if (clique) return s;
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return {};
}

GadgetAttachment attach_unhappiness_gadget(
    const ColoredGraph& g, const std::set<Vertex>& targets,
    std::optional<std::pair<Vertex, Vertex>> existing) {
  for (Vertex v : targets)
    if (!g.graph().has_vertex(v)) throw ContractViolation("target out of range");

  int ell = std::max(g.num_colors(), 2);
  Vertex t1, t2;
  int n = g.vertex_count();
  std::set<Edge> edges(g.graph().edges().begin(), g.graph().edges().end());
  std::map<Vertex, Color> pre = g.precoloring();
  if (existing) {
    t1 = existing->first;
    t2 = existing->second;
    if (!g.graph().has_vertex(t1) || !g.graph().has_vertex(t2) ||
        g.precolor(t1) != std::optional<Color>(1) ||
        g.precolor(t2) != std::optional<Color>(2) || !g.graph().adjacent(t1, t2))
      throw ContractViolation("existing gadget pair is not t1-t2 shaped");
  } else {
    t1 = n + 1;
    t2 = n + 2;
    n += 2;
    pre[t1] = 1;
    pre[t2] = 2;
    edges.insert(make_edge(t1, t2));
  }
  for (Vertex v : targets) {
    if (v == t1 || v == t2) throw ContractViolation("gadget cannot target itself");
    edges.insert(make_edge(v, t1));
    edges.insert(make_edge(v, t2));
  }
  return {ColoredGraph(Graph(n, {edges.begin(), edges.end()}), ell,
                       std::move(pre)),
          t1, t2};
}

LinearKernelResult linear_kernel(const ColoredGraph& g, long long k,
                                 const std::set<Vertex>& s) {
  check_clique_modulator(g, s);
  Working w = make_working(g, s, k);
  lift_colors(w, nullptr);
  attach_gadget(w, nullptr);
  // The fresh pair must not enter T through the modulator; drop it and wire
  // the gadget to the non-happy kept vertices only.
  w.mod.erase(w.t1);
  w.mod.erase(w.t2);
  return linear_extract(w, nullptr);
}

std::string serialize_trace(const KernelTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    switch (step.rule) {
      case KernelRule::kLiftColors: out << "lift-colors"; break;
      case KernelRule::kAttachGadget: out << "attach-gadget"; break;
      case KernelRule::kRemoveColor: out << "rr1"; break;
      case KernelRule::kClassUnhappy: out << "rr2"; break;
      case KernelRule::kRemoveEdge: out << "rr3"; break;
      case KernelRule::kIsolatedUnhappy: out << "rr4"; break;
      case KernelRule::kPrecoloredUnhappy: out << "rr5"; break;
      case KernelRule::kLinearExtract: out << "linear"; break;
    }
    for (int a : step.args) out << ' ' << a;
    out << '\n';
  }
  return out.str();
}

CubicKernelResult cubic_kernel(const ColoredGraph& g, long long k,
                               std::optional<std::set<Vertex>> s) {
  std::set<Vertex> mod = s ? *std::move(s) : clique_modulator_2approx(g.graph());
  check_clique_modulator(g, mod);

  CubicKernelResult out;
  Working w = make_working(g, std::move(mod), k);
  lift_colors(w, &out.trace);
  attach_gadget(w, &out.trace);
  const int d = static_cast<int>(w.mod.size());
  out.extended_modulator_size = d;

  while (true) {
    // RR1: drop a color absent from the precoloring, renumbering the rest.
    {
      std::vector<char> used(w.ell + 1, 0);
      for (Vertex v = 1; v <= w.n(); ++v)
        if (w.pre[v]) used[w.pre[v]] = 1;
      int unused = 0;
      for (Color c = 1; c <= w.ell; ++c)
        if (!used[c]) {
          unused = c;
          break;
        }
      if (unused) {
        for (Vertex v = 1; v <= w.n(); ++v)
          if (w.pre[v] > unused) --w.pre[v];
        --w.ell;
        out.trace.steps.push_back({KernelRule::kRemoveColor, {unused}});
        continue;
      }
    }

    // With every color present and more colors than d+1, two clique
    // vertices carry distinct precolors, so nothing in the clique can be
    // happy; the linear kernel finishes the job.
    if (w.ell > d + 1) break;

    std::set<Vertex> happy = pot_happy(w);
    auto slices = clique_slices(w, happy);
    std::vector<Color> live;  // L: colors with a non-empty slice
    size_t max_slice = 0;
    for (Color c = 1; c <= w.ell; ++c) {
      if (!slices[c].empty()) live.push_back(c);
      max_slice = std::max(max_slice, slices[c].size());
    }

    // RR2: a slice more than d below the largest never yields happy
    // vertices in an optimal coloring.
    {
      bool applied = false;
      for (Color c = 1; c <= w.ell && !applied; ++c) {
        if (slices[c].empty()) continue;
        if (slices[c].size() + d < max_slice) {
          std::vector<int> args{c};
          for (Vertex v : slices[c]) {
            make_unhappy(w, v);
            args.push_back(v);
          }
          out.trace.steps.push_back(
              {KernelRule::kClassUnhappy, std::move(args)});
          applied = true;
        }
      }
      if (applied) continue;
    }

    // RR3: an uncolored modulator vertex with more than d neighbors in one
    // slice loses one such edge.
    {
      bool applied = false;
      for (Vertex v : w.mod) {
        if (w.pre[v]) continue;
        std::vector<Color> order{0};
        order.insert(order.end(), live.begin(), live.end());
        for (Color c : order) {
          std::vector<Vertex> inter;
          std::set_intersection(w.adj[v].begin(), w.adj[v].end(),
                                slices[c].begin(), slices[c].end(),
                                std::back_inserter(inter));
          if (static_cast<int>(inter.size()) > d) {
            w.remove_edge(v, inter.front());
            out.trace.steps.push_back(
                {KernelRule::kRemoveEdge, {v, inter.front()}});
            applied = true;
            break;
          }
        }
        if (applied) break;
      }
      if (applied) continue;
    }

    // RR4: a large uncommitted slice with a vertex untouched by the
    // modulator always yields that vertex; count it out.
    if (slices[0].size() > static_cast<size_t>(d + 1)) {
      Vertex found = 0;
      for (Vertex v : slices[0]) {
        bool has_mod_neighbor = false;
        for (Vertex u : w.adj[v])
          if (w.mod.count(u)) {
            has_mod_neighbor = true;
            break;
          }
        if (!has_mod_neighbor) {
          found = v;
          break;
        }
      }
      if (found) {
        make_unhappy(w, found);
        w.k -= 1;
        out.trace.steps.push_back({KernelRule::kIsolatedUnhappy, {found}});
        continue;
      }
    }

    // RR5: when every live slice is large and owns a vertex whose modulator
    // neighbors are all precolored, exactly one of those vertices is happy
    // in an optimum; retire one per slice.
    if (!live.empty()) {
      std::vector<int> picks;
      bool all = true;
      for (Color c : live) {
        if (slices[c].size() <= static_cast<size_t>(d + 1)) {
          all = false;
          break;
        }
        Vertex found = 0;
        for (Vertex v : slices[c]) {
          bool only_precolored = true;
          for (Vertex u : w.adj[v])
            if (w.mod.count(u) && !w.pre[u]) {
              only_precolored = false;
              break;
            }
          if (only_precolored) {
            found = v;
            break;
          }
        }
        if (!found) {
          all = false;
          break;
        }
        picks.push_back(found);
      }
      if (all) {
        for (Vertex v : picks) make_unhappy(w, v);
        w.k -= 1;
        out.trace.steps.push_back(
            {KernelRule::kPrecoloredUnhappy, std::move(picks)});
        continue;
      }
    }
    break;
  }

  {
    std::set<Vertex> happy = pot_happy(w);
    int in_clique = 0;
    for (Vertex v : happy)
      if (!w.mod.count(v)) ++in_clique;
    out.clique_pot_happy_after_rules = in_clique;
  }

  LinearKernelResult fin = linear_extract(w, &out.trace);
  out.graph = std::move(fin.graph);
  out.k = fin.k;
  return out;
}

std::pair<ColoredGraph, long long> replay_trace(const ColoredGraph& g,
                                                long long k,
                                                const KernelTrace& trace) {
  Working w = make_working(g, {}, k);
  bool extracted = false;
  ColoredGraph result;
  for (const auto& step : trace.steps) {
    const auto& a = step.args;
    switch (step.rule) {
      case KernelRule::kLiftColors:
        w.ell = a.at(0);
        break;
      case KernelRule::kAttachGadget:
        attach_gadget(w, nullptr);
        break;
      case KernelRule::kRemoveColor:
        for (Vertex v = 1; v <= w.n(); ++v)
          if (w.pre[v] > a.at(0)) --w.pre[v];
        --w.ell;
        break;
      case KernelRule::kClassUnhappy:
        for (size_t i = 1; i < a.size(); ++i) make_unhappy(w, a[i]);
        break;
      case KernelRule::kRemoveEdge:
        w.remove_edge(a.at(0), a.at(1));
        break;
      case KernelRule::kIsolatedUnhappy:
        make_unhappy(w, a.at(0));
        w.k -= 1;
        break;
      case KernelRule::kPrecoloredUnhappy:
        for (int v : a) make_unhappy(w, v);
        w.k -= 1;
        break;
      case KernelRule::kLinearExtract: {
        const int base = a.at(0);
        std::vector<Vertex> kept(a.begin() + 1, a.begin() + 1 + base);
        Vertex t1 = a.at(1 + base), t2 = a.at(2 + base);
        std::map<Vertex, Vertex> local;
        for (int i = 0; i < base; ++i) local[kept[i]] = i + 1;
        std::set<Edge> edges;
        for (Vertex v : kept)
          for (Vertex u : w.adj[v]) {
            if (u == t1) edges.insert(make_edge(local[v], base + 1));
            else if (u == t2) edges.insert(make_edge(local[v], base + 2));
            else if (local.count(u)) edges.insert(make_edge(local[v], local[u]));
          }
        edges.insert(make_edge(base + 1, base + 2));
        for (size_t i = 3 + base; i < a.size(); ++i) {
          edges.insert(make_edge(local.at(a[i]), base + 1));
          edges.insert(make_edge(local.at(a[i]), base + 2));
        }
        std::map<Vertex, Color> pre;
        for (Vertex v : kept)
          if (w.pre[v]) pre[local[v]] = w.pre[v];
        pre[base + 1] = 1;
        pre[base + 2] = 2;
        result = ColoredGraph(Graph(base + 2, {edges.begin(), edges.end()}),
                              std::max(w.ell, 2), std::move(pre));
        extracted = true;
        break;
      }
    }
  }
  if (!extracted) {
    // Partial traces replay to the intermediate working instance.
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= w.n(); ++v)
      for (Vertex u : w.adj[v])
        if (v < u) edges.push_back({v, u});
    std::map<Vertex, Color> pre;
    for (Vertex v = 1; v <= w.n(); ++v)
      if (w.pre[v]) pre[v] = w.pre[v];
    result = ColoredGraph(Graph(w.n(), std::move(edges)), w.ell, std::move(pre));
  }
  return {result, w.k};
}

}  // namespace happy
