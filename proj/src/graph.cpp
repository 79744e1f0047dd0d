#include "happy/graph.hpp"

#include <algorithm>
#include <string>

namespace happy {

Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidInstance("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) throw InvalidInstance("edge endpoint out of range");
    if (u == v) throw InvalidInstance("self-loop on vertex " + std::to_string(u));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidInstance("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_ + 1, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (!has_vertex(v)) throw ContractViolation("vertex out of range");
  return adj_[v];
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

ColoredGraph::ColoredGraph(Graph graph, int num_colors,
                           std::map<Vertex, Color> precoloring)
    : graph_(std::move(graph)),
      num_colors_(num_colors),
      precoloring_(std::move(precoloring)) {
  if (num_colors_ < 1) throw InvalidInstance("need at least one color");
  for (const auto& [v, col] : precoloring_) {
    if (!graph_.has_vertex(v))
      throw InvalidInstance("precolored vertex out of range");
    if (col < 1 || col > num_colors_)
      throw InvalidInstance("precolor out of range on vertex " +
                            std::to_string(v));
  }
}

std::optional<Color> ColoredGraph::precolor(Vertex v) const {
  auto it = precoloring_.find(v);
  if (it == precoloring_.end()) return std::nullopt;
  return it->second;
}

Coloring::Coloring(const ColoredGraph& g, std::vector<Color> assignment)
    : assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != g.vertex_count())
    throw ContractViolation("coloring/graph size mismatch");
  for (Color c : assignment_)
    if (c < 1 || c > g.num_colors())
      throw ContractViolation("color out of range in coloring");
  for (const auto& [v, col] : g.precoloring())
    if (assignment_[v - 1] != col)
      throw ContractViolation("coloring does not extend the precoloring");
}

std::optional<Vertex> VertexSubgraph::to_local(Vertex original) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), original);
  if (it == vertices.end() || *it != original) return std::nullopt;
  return static_cast<Vertex>(it - vertices.begin()) + 1;
}

std::set<Vertex> happy_vertices(const ColoredGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count())
    throw ContractViolation("coloring/graph size mismatch");
  std::set<Vertex> happy;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    bool ok = true;
    for (Vertex u : g.graph().neighbors(v))
      if (c.color(u) != c.color(v)) {
        ok = false;
        break;
      }
    if (ok) happy.insert(v);
  }
  return happy;
}

long long happy_edge_count(const ColoredGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count())
    throw ContractViolation("coloring/graph size mismatch");
  long long count = 0;
  for (const auto& [u, v] : g.graph().edges())
    if (c.color(u) == c.color(v)) ++count;
  return count;
}

HappySets potentially_happy_sets(const ColoredGraph& g) {
  HappySets result;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    std::optional<Color> seen;
    bool potentially = true;
    auto absorb = [&](Vertex u) {
      auto col = g.precolor(u);
      if (!col) return;
      if (seen && *seen != *col)
        potentially = false;
      else
        seen = *col;
    };
    absorb(v);
    for (Vertex u : g.graph().neighbors(v)) {
      absorb(u);
      if (!potentially) break;
    }
    if (!potentially) continue;
    result.all.insert(v);
    if (seen) result.per_color[*seen].insert(v);
  }
  return result;
}

VertexSubgraph induced_square(const ColoredGraph& g,
                              const std::set<Vertex>& s) {
  for (Vertex v : s)
    if (!g.graph().has_vertex(v)) throw ContractViolation("vertex out of range");
  VertexSubgraph out;
  out.vertices.assign(s.begin(), s.end());
  const int m = static_cast<int>(out.vertices.size());
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Vertex u = out.vertices[i], v = out.vertices[j];
      bool close = g.graph().adjacent(u, v);
      if (!close) {
        for (Vertex w : g.graph().neighbors(u))
          if (g.graph().adjacent(w, v)) {
            close = true;
            break;
          }
      }
      if (close) edges.emplace_back(i + 1, j + 1);
    }
  }
  out.graph = Graph(m, std::move(edges));
  return out;
}

}  // namespace happy
