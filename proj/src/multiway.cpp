#include "happy/multiway.hpp"

#include <algorithm>
#include <map>

namespace happy {

void validate_gmc(const GmcInstance& inst) {
  std::set<Vertex> seen;
  for (const auto& group : inst.groups) {
    for (Vertex v : group) {
      if (!inst.graph.has_vertex(v))
        throw InvalidInstance("terminal out of range");
      if (!seen.insert(v).second)
        throw InvalidInstance("terminal groups are not disjoint");
    }
  }
}

std::optional<Coloring> feasible_happy_set(const ColoredGraph& g,
                                           const std::set<Vertex>& h) {
  for (Vertex v : h)
    if (!g.graph().has_vertex(v)) throw ContractViolation("vertex out of range");

  const int n = g.vertex_count();
  // Union components of the subgraph on N[h], keeping only edges incident
  // to h. Happiness of h constrains exactly those edges.
  std::vector<int> parent(n + 1);
  for (int v = 0; v <= n; ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex v : h)
    for (Vertex u : g.graph().neighbors(v)) parent[find(u)] = find(v);

  std::vector<char> in_closed(n + 1, 0);
  for (Vertex v : h) {
    in_closed[v] = 1;
    for (Vertex u : g.graph().neighbors(v)) in_closed[u] = 1;
  }

  std::map<Vertex, Color> component_color;  // root -> unique precolor
  for (Vertex v = 1; v <= n; ++v) {
    if (!in_closed[v]) continue;
    auto col = g.precolor(v);
    if (!col) continue;
    Vertex root = find(v);
    auto [it, inserted] = component_color.emplace(root, *col);
    if (!inserted && it->second != *col) return std::nullopt;
  }

  std::vector<Color> assignment(n, 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (in_closed[v]) {
      auto it = component_color.find(find(v));
      assignment[v - 1] = it == component_color.end() ? 1 : it->second;
    } else {
      assignment[v - 1] = g.precolor(v).value_or(1);
    }
  }
  return Coloring(g, std::move(assignment));
}

std::optional<GmcReduction> mhv_to_gmc(const ColoredGraph& g, long long k) {
  HappySets hs = potentially_happy_sets(g);
  const long long h = static_cast<long long>(hs.all.size());
  if (k > h) return std::nullopt;

  VertexSubgraph square = induced_square(g, hs.all);
  GmcReduction out;
  out.happy_ids = square.vertices;
  out.instance.graph = std::move(square.graph);
  for (const auto& [color, members] : hs.per_color) {
    (void)color;
    std::set<Vertex> group;
    for (Vertex v : members) group.insert(*square.to_local(v));
    if (!group.empty()) out.instance.groups.push_back(std::move(group));
  }
  out.instance.budget = h - k;
  return out;
}

MhvCompression gmc_compress_to_mhv(const ColoredGraph& g, long long k) {
  HappySets hs = potentially_happy_sets(g);
  VertexSubgraph square = induced_square(g, hs.all);
  const int h = static_cast<int>(square.vertices.size());
  const int q = square.graph.edge_count();
  const Vertex t1 = h + q + 1, t2 = h + q + 2;

  std::vector<Edge> edges;
  int sub = h;  // subdivision vertices occupy h+1 .. h+q
  for (const auto& [u, v] : square.graph.edges()) {
    ++sub;
    edges.push_back(make_edge(u, sub));
    edges.push_back(make_edge(sub, v));
    edges.push_back(make_edge(t1, sub));
    edges.push_back(make_edge(t2, sub));
  }
  edges.push_back(make_edge(t1, t2));

  std::map<Vertex, Color> pre;
  for (const auto& [color, members] : hs.per_color)
    for (Vertex v : members) pre[*square.to_local(v)] = color;
  pre[t1] = 1;
  pre[t2] = 2;

  MhvCompression out;
  out.graph = ColoredGraph(Graph(h + q + 2, std::move(edges)),
                           std::max(g.num_colors(), 2), std::move(pre));
  out.k = k;
  out.happy_ids = square.vertices;
  return out;
}

}  // namespace happy
