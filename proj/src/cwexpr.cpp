#include "happy/cwexpr.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace happy {

namespace {

int append_tree(std::vector<WNode>& out, const std::vector<WNode>& src,
                int root) {
  const int offset = static_cast<int>(out.size());
  for (WNode node : src) {
    if (node.left >= 0) node.left += offset;
    if (node.right >= 0) node.right += offset;
    out.push_back(node);
  }
  return root + offset;
}

}  // namespace

WExpression WExpression::introduce(Vertex v, int label) {
  WExpression e;
  e.nodes_.push_back({WOp::kIntroduce, v, label, -1, -1});
  e.root_ = 0;
  e.validate();
  return e;
}

WExpression WExpression::disjoint_union(WExpression l, WExpression r) {
  WExpression e;
  int lr = append_tree(e.nodes_, l.nodes_, l.root_);
  int rr = append_tree(e.nodes_, r.nodes_, r.root_);
  e.nodes_.push_back({WOp::kUnion, 0, 0, lr, rr});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.validate();
  return e;
}

WExpression WExpression::rename(int i, int j, WExpression child) {
  WExpression e;
  int cr = append_tree(e.nodes_, child.nodes_, child.root_);
  e.nodes_.push_back({WOp::kRename, i, j, cr, -1});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.validate();
  return e;
}

WExpression WExpression::join_edges(int i, int j, WExpression child) {
  WExpression e;
  int cr = append_tree(e.nodes_, child.nodes_, child.root_);
  e.nodes_.push_back({WOp::kJoin, i, j, cr, -1});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.validate();
  return e;
}

void WExpression::validate() const {
  std::set<Vertex> ids;
  for (const WNode& node : nodes_) {
    switch (node.op) {
      case WOp::kIntroduce:
        if (node.a < 1) throw InvalidInstance("vertex id must be positive");
        if (node.b < 1) throw InvalidInstance("label must be positive");
        if (!ids.insert(node.a).second)
          throw InvalidInstance("duplicate vertex id " + std::to_string(node.a));
        break;
      case WOp::kRename:
        if (node.a < 1 || node.b < 1)
          throw InvalidInstance("label must be positive");
        break;
      case WOp::kJoin:
        if (node.a < 1 || node.b < 1)
          throw InvalidInstance("label must be positive");
        if (node.a == node.b)
          throw InvalidInstance("join-edges needs two distinct labels");
        break;
      case WOp::kUnion:
        break;
    }
  }
}

int WExpression::width() const {
  int w = 1;
  for (const WNode& node : nodes_) {
    if (node.op == WOp::kIntroduce) w = std::max(w, node.b);
    if (node.op == WOp::kRename || node.op == WOp::kJoin)
      w = std::max({w, node.a, node.b});
  }
  return w;
}

std::vector<Vertex> WExpression::vertex_ids() const {
  std::vector<Vertex> ids;
  for (const WNode& node : nodes_)
    if (node.op == WOp::kIntroduce) ids.push_back(node.a);
  std::sort(ids.begin(), ids.end());
  return ids;
}

Graph LabeledGraph::to_graph(std::vector<Vertex>* order) const {
  std::map<Vertex, Vertex> local;
  for (Vertex v : vertices) local[v] = static_cast<Vertex>(local.size()) + 1;
  std::vector<Edge> es;
  for (const auto& [u, v] : edges) es.push_back(make_edge(local[u], local[v]));
  if (order) *order = vertices;
  return Graph(static_cast<int>(vertices.size()), std::move(es));
}

LabeledGraph eval_wexpr(const WExpression& expr) {
  std::vector<LabeledGraph> value(expr.nodes().size());
  for (size_t idx = 0; idx < expr.nodes().size(); ++idx) {
    const WNode& node = expr.nodes()[idx];
    LabeledGraph& out = value[idx];
    switch (node.op) {
      case WOp::kIntroduce:
        out.vertices = {node.a};
        out.labels[node.a] = node.b;
        break;
      case WOp::kUnion: {
        const LabeledGraph& l = value[node.left];
        const LabeledGraph& r = value[node.right];
        out = l;
        out.vertices.insert(out.vertices.end(), r.vertices.begin(),
                            r.vertices.end());
        std::sort(out.vertices.begin(), out.vertices.end());
        out.edges.insert(r.edges.begin(), r.edges.end());
        out.labels.insert(r.labels.begin(), r.labels.end());
        break;
      }
      case WOp::kRename:
        out = value[node.left];
        for (auto& [v, label] : out.labels)
          if (label == node.a) label = node.b;
        break;
      case WOp::kJoin: {
        out = value[node.left];
        std::vector<Vertex> with_i, with_j;
        for (const auto& [v, label] : out.labels) {
          if (label == node.a) with_i.push_back(v);
          if (label == node.b) with_j.push_back(v);
        }
        for (Vertex u : with_i)
          for (Vertex v : with_j) out.edges.insert(make_edge(u, v));
        break;
      }
    }
  }
  return value[expr.root()];
}

namespace {

// Per-label codes: 0 empty, 1 terminal-free, 2 reaches two or more
// terminals, 3+g reaches exactly one terminal (g = group id; labels in one
// group reach the same terminal).
constexpr uint8_t kEmpty = 0;
constexpr uint8_t kZero = 1;
constexpr uint8_t kTwo = 2;
constexpr uint8_t kOneBase = 3;

// Besides the label types, the state records which label pairs share a
// connected component of the surviving graph. Without this a join-edges
// operator cannot tell which OTHER labels become attached to a terminal
// through the merged component, and the table accepts cuts that do not
// separate. Pairs whose sharing is implied (two labels of one group both
// touch their terminal's component) or irrelevant (a label that already
// reaches two terminals can never change type) are dropped, which keeps the
// encoding canonical.
struct State {
  std::vector<uint8_t> types;
  uint64_t share = 0;  // bit per unordered label pair

  bool operator<(const State& other) const {
    if (share != other.share) return share < other.share;
    return types < other.types;
  }
};

int pair_bit(int w, int x, int y) {  // 0-based labels, x != y
  if (x > y) std::swap(x, y);
  return x * w - x * (x + 1) / 2 + (y - x - 1);
}

bool is_one(uint8_t code) { return code >= kOneBase; }

State canonical(State s) {
  const int w = static_cast<int>(s.types.size());
  std::map<uint8_t, uint8_t> remap;
  for (auto& code : s.types) {
    if (!is_one(code)) continue;
    auto it = remap.emplace(code, static_cast<uint8_t>(kOneBase + remap.size()))
                  .first;
    code = it->second;
  }
  for (int x = 0; x < w; ++x) {
    for (int y = x + 1; y < w; ++y) {
      uint64_t bit = 1ULL << pair_bit(w, x, y);
      if (!(s.share & bit)) continue;
      bool eligible_x = s.types[x] == kZero || is_one(s.types[x]);
      bool eligible_y = s.types[y] == kZero || is_one(s.types[y]);
      bool same_group =
          is_one(s.types[x]) && is_one(s.types[y]) && s.types[x] == s.types[y];
      if (!eligible_x || !eligible_y || same_group) s.share &= ~bit;
    }
  }
  return s;
}

// Merge of two label populations (rename, union). Empty absorbs,
// terminal-free defers, multi-terminal dominates; two single-terminal
// populations keep their type only when they share a group, and groups from
// opposite union sides never do.
uint8_t merge_codes(uint8_t x, uint8_t y, bool across_union) {
  if (x == kEmpty) return y;
  if (y == kEmpty) return x;
  if (x == kTwo || y == kTwo) return kTwo;
  if (x == kZero) return y;
  if (y == kZero) return x;
  if (!across_union && x == y) return x;
  return kTwo;
}

using Table = std::map<State, long long>;

void relax(Table& table, State s, long long value) {
  auto [it, fresh] = table.emplace(std::move(s), value);
  if (!fresh && value < it->second) it->second = value;
}

}  // namespace

NmcCwResult solve_nmc_cw(const WExpression& expr,
                         const std::set<Vertex>& terminals, long long k) {
  auto ids = expr.vertex_ids();
  for (Vertex t : terminals)
    if (!std::binary_search(ids.begin(), ids.end(), t))
      throw ContractViolation("terminal is not a vertex of the expression");

  const int w = expr.width();
  if (w > 11) throw ContractViolation("expression width too large for the DP");

  NmcCwResult result;
  std::vector<Table> tables(expr.nodes().size());

  for (size_t idx = 0; idx < expr.nodes().size(); ++idx) {
    const WNode& node = expr.nodes()[idx];
    Table& table = tables[idx];
    switch (node.op) {
      case WOp::kIntroduce: {
        // A kept terminal reaches itself; a kept non-terminal reaches
        // nothing. Only non-terminals may be deleted.
        State keep;
        keep.types.assign(w, kEmpty);
        keep.types[node.b - 1] = terminals.count(node.a) ? kOneBase : kZero;
        relax(table, canonical(std::move(keep)), 0);
        if (!terminals.count(node.a)) {
          State del;
          del.types.assign(w, kEmpty);
          relax(table, std::move(del), 1);
        }
        break;
      }
      case WOp::kRename: {
        const int i = node.a - 1, j = node.b - 1;
        for (const auto& [child, value] : tables[node.left]) {
          if (i == j) {
            relax(table, child, value);
            continue;
          }
          State s = child;
          uint8_t from = s.types[i];
          s.types[i] = kEmpty;
          s.types[j] = merge_codes(from, s.types[j], false);
          for (int y = 0; y < w; ++y) {
            if (y == i || y == j) continue;
            if (s.share & (1ULL << pair_bit(w, i, y)))
              s.share |= 1ULL << pair_bit(w, j, y);
          }
          for (int y = 0; y < w; ++y)
            if (y != i) s.share &= ~(1ULL << pair_bit(w, i, y));
          relax(table, canonical(std::move(s)), value);
        }
        break;
      }
      case WOp::kUnion: {
        for (const auto& [ls, lv] : tables[node.left]) {
          for (const auto& [rs, rv] : tables[node.right]) {
            State s;
            s.types.assign(w, kEmpty);
            for (int i = 0; i < w; ++i) {
              bool both_one = is_one(ls.types[i]) && is_one(rs.types[i]);
              s.types[i] = merge_codes(ls.types[i], rs.types[i], both_one);
              // Keep group ids from the two sides disjoint; canonical()
              // renumbers afterwards.
              if (!both_one && is_one(s.types[i])) {
                if (is_one(ls.types[i]))
                  s.types[i] = static_cast<uint8_t>(
                      kOneBase + 2 * (ls.types[i] - kOneBase));
                else
                  s.types[i] = static_cast<uint8_t>(
                      kOneBase + 2 * (rs.types[i] - kOneBase) + 1);
              }
            }
            s.share = ls.share | rs.share;
            relax(table, canonical(std::move(s)), lv + rv);
          }
        }
        break;
      }
      case WOp::kJoin: {
        const int i = node.a - 1, j = node.b - 1;
        for (const auto& [child, value] : tables[node.left]) {
          uint8_t ci = child.types[i], cj = child.types[j];
          if (ci == kEmpty || cj == kEmpty) {  // no edge is actually added
            relax(table, child, value);
            continue;
          }
          if (ci == kTwo || cj == kTwo) continue;
          if (is_one(ci) && is_one(cj) && ci != cj) continue;

          // The join merges every component touching label i or j into one.
          // Labels sharing a component with i or j (including the whole
          // group of a single-terminal i or j) follow that component.
          uint8_t target = 0;  // group code the merged component reaches
          if (is_one(ci)) target = ci;
          if (is_one(cj)) target = cj;

          std::vector<char> touched(w, 0);
          touched[i] = touched[j] = 1;
          for (int x = 0; x < w; ++x) {
            if (touched[x] || child.types[x] == kEmpty) continue;
            if ((child.share & (1ULL << pair_bit(w, x, i))) ||
                (child.share & (1ULL << pair_bit(w, x, j))))
              touched[x] = 1;
            else if (target != 0 && child.types[x] == target)
              touched[x] = 1;
          }

          State s = child;
          for (int x = 0; x < w; ++x) {
            if (!touched[x] || target == 0) continue;
            if (s.types[x] == kZero)
              s.types[x] = target;
            else if (is_one(s.types[x]) && s.types[x] != target)
              s.types[x] = kTwo;
          }
          for (int x = 0; x < w; ++x)
            for (int y = x + 1; y < w; ++y)
              if (touched[x] && touched[y])
                s.share |= 1ULL << pair_bit(w, x, y);
          relax(table, canonical(std::move(s)), value);
        }
        break;
      }
    }
    result.max_states = std::max(result.max_states, table.size());
  }

  const Table& final_table = tables[expr.root()];
  if (final_table.empty()) {
    result.min_cut = std::nullopt;
    result.yes = false;
    return result;
  }
  long long best = -1;
  for (const auto& [state, value] : final_table)
    if (best < 0 || value < best) best = value;
  result.min_cut = best;
  result.yes = best <= k;
  return result;
}

}  // namespace happy
