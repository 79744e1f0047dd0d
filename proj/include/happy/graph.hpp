#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "happy/errors.hpp"

namespace happy {

// Vertices are 1..n, colors are 1..ell. All iteration is in ascending order,
// so every "arbitrary" choice downstream is deterministic.
using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;  // stored normalized, first < second

// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                // sorted, u < v
  std::vector<std::vector<Vertex>> adj_;   // adj_[v], 1-indexed, sorted
};

Edge make_edge(Vertex u, Vertex v);

// A graph together with a partial precoloring over colors 1..ell.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(Graph graph, int num_colors, std::map<Vertex, Color> precoloring);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int num_colors() const { return num_colors_; }
  const std::map<Vertex, Color>& precoloring() const { return precoloring_; }
  std::optional<Color> precolor(Vertex v) const;

  bool operator==(const ColoredGraph& other) const {
    return graph_ == other.graph_ && num_colors_ == other.num_colors_ &&
           precoloring_ == other.precoloring_;
  }

 private:
  Graph graph_;
  int num_colors_ = 1;
  std::map<Vertex, Color> precoloring_;
};

// A total vertex -> color map. Construction checks that it extends the
// precoloring of the graph it belongs to.
class Coloring {
 public:
  Coloring(const ColoredGraph& g, std::vector<Color> assignment);

  Color color(Vertex v) const { return assignment_[v - 1]; }
  int size() const { return static_cast<int>(assignment_.size()); }
  const std::vector<Color>& values() const { return assignment_; }

  bool operator==(const Coloring& other) const {
    return assignment_ == other.assignment_;
  }
  bool operator<(const Coloring& other) const {
    return assignment_ < other.assignment_;
  }

 private:
  std::vector<Color> assignment_;  // index v-1 holds the color of vertex v
};

// Potentially happy vertices, overall and per forced color.
struct HappySets {
  std::set<Vertex> all;
  std::map<Color, std::set<Vertex>> per_color;
};

// An induced subgraph with its vertices renumbered 1..|vertices|.
// vertices[i-1] is the original id of local vertex i.
struct VertexSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;

  Vertex to_original(Vertex local) const { return vertices[local - 1]; }
  std::optional<Vertex> to_local(Vertex original) const;
};

// Vertices whose every neighbor shares their color. Isolated vertices are
// happy under any coloring.
std::set<Vertex> happy_vertices(const ColoredGraph& g, const Coloring& c);

// Number of edges whose endpoints share a color.
long long happy_edge_count(const ColoredGraph& g, const Coloring& c);

// A vertex is potentially happy if its closed neighborhood carries at most
// one distinct precolor (matching its own, if precolored). per_color[i]
// holds those members whose closed neighborhood contains a precolored-i
// vertex; a coloring can make such a vertex happy only with color i.
HappySets potentially_happy_sets(const ColoredGraph& g);

// Graph on s where u,v are adjacent iff their distance in g is at most 2.
VertexSubgraph induced_square(const ColoredGraph& g, const std::set<Vertex>& s);

}  // namespace happy
