#include "happy/graph_classes.hpp"

#include <algorithm>

namespace happy {

std::vector<std::vector<Vertex>> connected_components(
    const Graph& g, const std::set<Vertex>& keep) {
  std::vector<char> seen(g.vertex_count() + 1, 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex start : keep) {
    if (seen[start]) continue;
    std::vector<Vertex> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v))
        if (keep.count(u) && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::set<Vertex> all;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) all.insert(v);
  return connected_components(g, all);
}

bool is_cluster_graph(const Graph& g, const std::set<Vertex>& deleted) {
  std::set<Vertex> keep;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!deleted.count(v)) keep.insert(v);
  for (const auto& comp : connected_components(g, keep)) {
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (!g.adjacent(comp[i], comp[j])) return false;
  }
  return true;
}

bool is_cluster_graph(const Graph& g) { return is_cluster_graph(g, {}); }

bool is_disjoint_p3s(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    if (comp.size() != 3) return false;
    int deg1 = 0, deg2 = 0;
    for (Vertex v : comp) {
      int d = g.degree(v);
      if (d == 1)
        ++deg1;
      else if (d == 2)
        ++deg2;
      else
        return false;
    }
    if (deg1 != 2 || deg2 != 1) return false;
  }
  return true;
}

bool is_disjoint_triangles(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    if (comp.size() != 3) return false;
    for (Vertex v : comp)
      if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_disjoint_stars(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    bool covered = false;
    for (Vertex center : comp) {
      bool ok = true;
      for (Vertex v : comp) {
        if (v == center) continue;
        for (Vertex u : g.neighbors(v))
          if (u != center) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

Graph delete_vertices(const Graph& g, const std::set<Vertex>& deleted) {
  std::vector<Vertex> remap(g.vertex_count() + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!deleted.count(v)) remap[v] = ++next;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (remap[u] && remap[v]) edges.push_back(make_edge(remap[u], remap[v]));
  return Graph(next, std::move(edges));
}

}  // namespace happy
