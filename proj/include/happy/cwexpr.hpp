#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

// A clique-width expression: a tree of introduce / disjoint-union / rename /
// join-edges operators evaluating to a labeled graph. Vertex ids are
// arbitrary positive integers, globally unique across the tree.
enum class WOp { kIntroduce, kUnion, kRename, kJoin };

struct WNode {
  WOp op;
  int a = 0;  // introduce: vertex id; rename/join: label i
  int b = 0;  // introduce: label;    rename/join: label j
  int left = -1;
  int right = -1;

  bool operator==(const WNode&) const = default;
};

class WExpression {
 public:
  static WExpression introduce(Vertex v, int label);
  static WExpression disjoint_union(WExpression l, WExpression r);
  static WExpression rename(int i, int j, WExpression child);
  static WExpression join_edges(int i, int j, WExpression child);

  // Children always precede parents in nodes().
  const std::vector<WNode>& nodes() const { return nodes_; }
  int root() const { return root_; }
  int width() const;                       // largest label used
  std::vector<Vertex> vertex_ids() const;  // sorted

  bool operator==(const WExpression& other) const {
    return nodes_ == other.nodes_ && root_ == other.root_;
  }

 private:
  void validate() const;

  std::vector<WNode> nodes_;
  int root_ = -1;
};

struct LabeledGraph {
  std::vector<Vertex> vertices;  // sorted original ids
  std::set<Edge> edges;          // normalized pairs of original ids
  std::map<Vertex, int> labels;

  bool adjacent(Vertex u, Vertex v) const { return edges.count(make_edge(u, v)); }
  // Renumbers to 1..n; order[i-1] is the original id of vertex i.
  Graph to_graph(std::vector<Vertex>* order = nullptr) const;
};

LabeledGraph eval_wexpr(const WExpression& expr);

struct NmcCwResult {
  std::optional<long long> min_cut;  // nullopt: terminals inseparable
  bool yes = false;                  // min_cut <= k
  std::size_t max_states = 0;        // largest DP table over subexpressions
};

// Dynamic program over the expression tree. Each DP state is a partition of
// the labels into empty, terminal-free, single-terminal (grouped by shared
// terminal) and multi-terminal classes; at most (w+3)^w states per
// subexpression.
NmcCwResult solve_nmc_cw(const WExpression& expr,
                         const std::set<Vertex>& terminals, long long k);

}  // namespace happy
