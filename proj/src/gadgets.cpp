#include "happy/gadgets.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace happy {

namespace {

int clique_of(const RmisInstance& inst, Vertex v) {
  for (size_t i = 0; i < inst.cliques.size(); ++i)
    if (inst.cliques[i].count(v)) return static_cast<int>(i) + 1;
  throw InvalidInstance("vertex not in any clique");
}

void require_rmis_preconditions(const RmisInstance& inst) {
  validate_rmis(inst);
  for (const auto& clique : inst.cliques)
    if (clique.size() < 2)
      throw ContractViolation("every clique needs at least two vertices");
}

void require_crbds_preconditions(const CrbdsInstance& inst) {
  validate_crbds(inst);
  std::vector<int> degree(inst.num_blue + 1, 0);
  for (auto [r, b] : inst.edges) ++degree[b];
  for (Vertex b = 1; b <= inst.num_blue; ++b)
    if (degree[b] < 2)
      throw ContractViolation("every blue vertex needs degree at least two");
  std::vector<int> class_size(inst.k + 1, 0);
  for (Color c : inst.coloring) ++class_size[c];
  for (Color c = 1; c <= inst.k; ++c)
    if (class_size[c] < 2)
      throw ContractViolation("every color needs at least two red vertices");
}

}  // namespace

GadgetInstance gen_rmis_to_mhv(const RmisInstance& inst) {
  require_rmis_preconditions(inst);
  const int m = inst.graph.edge_count();
  const int k = inst.k;

  // Edge j (0-based) owns vertices 3j+1 (endpoint of the smaller source
  // vertex), 3j+2 (middle), 3j+3; selectors come last.
  GadgetInstance out;
  std::vector<Edge> edges;
  std::map<Vertex, Color> pre;
  const int selector_base = 3 * m;
  for (int j = 0; j < m; ++j) {
    auto [u, v] = inst.graph.edges()[j];
    Vertex tu = 3 * j + 1, mid = 3 * j + 2, tv = 3 * j + 3;
    edges.push_back({tu, mid});
    edges.push_back({mid, tv});
    pre[tu] = u;
    pre[tv] = v;
    edges.push_back(make_edge(tu, selector_base + clique_of(inst, u)));
    edges.push_back(make_edge(tv, selector_base + clique_of(inst, v)));
  }
  for (int i = 1; i <= k; ++i) out.selectors.push_back(selector_base + i);
  out.graph = ColoredGraph(Graph(3 * m + k, std::move(edges)),
                           inst.graph.vertex_count(), std::move(pre));
  out.k_prime = static_cast<long long>(k) * inst.r;
  return out;
}

GadgetInstance gen_rmis_to_mhe(const RmisInstance& inst, MheVariant variant) {
  require_rmis_preconditions(inst);
  const int m = inst.graph.edge_count();
  const int k = inst.k;
  const int n = inst.graph.vertex_count();

  GadgetInstance out;
  std::set<Edge> edges;
  std::map<Vertex, Color> pre;
  const int selector_base = 3 * m;
  for (int j = 0; j < m; ++j) {
    auto [u, v] = inst.graph.edges()[j];
    Vertex tu = 3 * j + 1, mid = 3 * j + 2, tv = 3 * j + 3;
    edges.insert({tu, mid});
    edges.insert({mid, tv});
    pre[tu] = u;
    pre[tv] = v;
    Vertex si = selector_base + clique_of(inst, u);
    Vertex sj = selector_base + clique_of(inst, v);
    edges.insert(make_edge(tu, si));
    edges.insert(make_edge(tv, sj));
    edges.insert(make_edge(mid, si));
    edges.insert(make_edge(mid, sj));  // single edge when si == sj
    if (variant == MheVariant::kTriangle) edges.insert({tu, tv});
  }
  for (int i = 1; i <= k; ++i) out.selectors.push_back(selector_base + i);

  // Anchor paths: per clique i and vertex v of it, m paths precolored v,
  // each path vertex tied to the selector s_i.
  Vertex next = 3 * m + k;
  for (int i = 1; i <= k; ++i) {
    Vertex si = selector_base + i;
    for (Vertex v : inst.cliques[i - 1]) {
      for (int j = 0; j < m; ++j) {
        Vertex a1 = next + 1, a2 = next + 2, a3 = next + 3;
        next += 3;
        edges.insert({a1, a2});
        edges.insert({a2, a3});
        pre[a1] = pre[a2] = pre[a3] = v;
        edges.insert(make_edge(a1, si));
        edges.insert(make_edge(a2, si));
        edges.insert(make_edge(a3, si));
        if (variant == MheVariant::kTriangle) edges.insert({a1, a3});
      }
    }
  }

  out.graph = ColoredGraph(Graph(next, {edges.begin(), edges.end()}), n,
                           std::move(pre));
  out.k_prime = static_cast<long long>(k) * inst.r +
                (m + static_cast<long long>(k) * inst.r) +
                static_cast<long long>(3 * k + 2 * n) * m;
  if (variant == MheVariant::kTriangle)
    out.k_prime += static_cast<long long>(n) * m;
  return out;
}

GadgetInstance gen_crbds_to_mhv(const CrbdsInstance& inst) {
  require_crbds_preconditions(inst);

  std::vector<std::vector<Vertex>> blue_adj(inst.num_blue + 1);
  for (auto [r, b] : inst.edges) blue_adj[b].push_back(r);
  for (auto& nb : blue_adj) std::sort(nb.begin(), nb.end());

  GadgetInstance out;
  std::vector<Edge> edges;
  std::map<Vertex, Color> pre;
  // Stars first (center, then leaves in red order), then selectors.
  int star_vertices = inst.num_blue + static_cast<int>(inst.edges.size());
  Vertex next = 0;
  for (Vertex b = 1; b <= inst.num_blue; ++b) {
    Vertex center = ++next;
    for (Vertex r : blue_adj[b]) {
      Vertex leaf = ++next;
      edges.push_back(make_edge(center, leaf));
      pre[leaf] = r;
      edges.push_back(
          make_edge(leaf, star_vertices + inst.coloring[r - 1]));
    }
  }
  for (int i = 1; i <= inst.k; ++i)
    out.selectors.push_back(star_vertices + i);
  out.graph = ColoredGraph(Graph(star_vertices + inst.k, std::move(edges)),
                           inst.num_red, std::move(pre));
  out.k_prime = inst.num_blue;
  return out;
}

GadgetInstance gen_crbds_to_mhe(const CrbdsInstance& inst,
                                CrbdsMheVariant variant) {
  require_crbds_preconditions(inst);

  std::vector<std::vector<Vertex>> blue_adj(inst.num_blue + 1);
  for (auto [r, b] : inst.edges) blue_adj[b].push_back(r);
  for (auto& nb : blue_adj) std::sort(nb.begin(), nb.end());

  GadgetInstance out;
  std::set<Edge> edges;
  std::map<Vertex, Color> pre;
  int star_vertices = inst.num_blue + static_cast<int>(inst.edges.size());
  Vertex next = 0;
  std::vector<Vertex> centers;
  for (Vertex b = 1; b <= inst.num_blue; ++b) {
    Vertex center = ++next;
    centers.push_back(center);
    std::vector<Vertex> members{center};
    for (Vertex r : blue_adj[b]) {
      Vertex leaf = ++next;
      members.push_back(leaf);
      edges.insert(make_edge(center, leaf));
      pre[leaf] = r;
    }
    if (variant == CrbdsMheVariant::kCluster) {
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          edges.insert(make_edge(members[i], members[j]));
    }
  }
  for (int i = 1; i <= inst.k; ++i) {
    Vertex si = star_vertices + i;
    out.selectors.push_back(si);
    for (Vertex center : centers) edges.insert(make_edge(center, si));
  }
  // Per red vertex, |B| anchors precolored with it, tied to its selector.
  next = star_vertices + inst.k;
  for (Vertex r = 1; r <= inst.num_red; ++r) {
    Vertex si = star_vertices + inst.coloring[r - 1];
    for (int copy = 0; copy < inst.num_blue; ++copy) {
      Vertex anchor = ++next;
      pre[anchor] = r;
      edges.insert(make_edge(anchor, si));
    }
  }
  out.graph = ColoredGraph(Graph(next, {edges.begin(), edges.end()}),
                           inst.num_red, std::move(pre));
  out.k_prime = static_cast<long long>(2 + inst.k) * inst.num_blue;
  return out;
}

namespace {

// Deterministic Fisher-Yates; std::shuffle's sequence is
// implementation-defined, this one is pinned.
template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<size_t>(rng() % i)]);
}

}  // namespace

RmisInstance gen_random_rmis(int k, int q, int x, unsigned seed) {
  if (k < 2 || q < 2) throw ContractViolation("need k >= 2 and q >= 2");
  if (x < 0 || x > q * (k - 1))
    throw ContractViolation("matching rounds out of range");

  const int n = k * q;
  auto vertex = [q](int clique, int pos) { return clique * q + pos + 1; };
  std::set<Edge> edges;
  RmisInstance inst;
  inst.k = k;
  inst.r = q - 1 + x;
  inst.cliques.resize(k);
  for (int c = 0; c < k; ++c) {
    for (int p = 0; p < q; ++p) {
      inst.cliques[c].insert(vertex(c, p));
      for (int p2 = p + 1; p2 < q; ++p2)
        edges.insert(make_edge(vertex(c, p), vertex(c, p2)));
    }
  }

  std::mt19937 rng(seed);
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  auto clique_index = [q](Vertex v) { return (v - 1) / q; };

  const int max_retries = 200;
  for (int round = 0; round < x; ++round) {
    bool done = false;
    for (int attempt = 0; attempt <= max_retries && !done; ++attempt) {
      std::vector<Edge> proposal;
      if (attempt == 0 && k % 2 == 0) {
        // Rotate the clique cycle and the position offset with the round.
        int shift = round % k, off = round % q;
        bool clean = true;
        for (int a = 0; a < k && clean; a += 2) {
          int ca = (a + shift) % k, cb = (a + 1 + shift) % k;
          for (int p = 0; p < q; ++p) {
            Edge e = make_edge(vertex(ca, p), vertex(cb, (p + off) % q));
            if (edges.count(e)) {
              clean = false;
              break;
            }
            proposal.push_back(e);
          }
        }
        if (!clean) continue;
      } else {
        shuffle_vec(order, rng);
        std::vector<char> paired(n + 1, 0);
        std::set<Edge> taken;
        for (int i = 0; i < n; ++i) {
          Vertex u = order[i];
          if (paired[u]) continue;
          Vertex partner = 0;
          for (int j = i + 1; j < n; ++j) {
            Vertex v = order[j];
            if (paired[v] || clique_index(u) == clique_index(v)) continue;
            Edge e = make_edge(u, v);
            if (edges.count(e) || taken.count(e)) continue;
            partner = v;
            break;
          }
          if (!partner) break;
          paired[u] = paired[partner] = 1;
          Edge e = make_edge(u, partner);
          taken.insert(e);
          proposal.push_back(e);
        }
        if (proposal.size() != static_cast<size_t>(n / 2) || n % 2 != 0)
          continue;
      }
      edges.insert(proposal.begin(), proposal.end());
      done = true;
    }
    if (!done)
      throw GenerationError(
          "could not place matching round " + std::to_string(round + 1) +
          " after " + std::to_string(max_retries) + " retries");
  }

  inst.graph = Graph(n, {edges.begin(), edges.end()});
  validate_rmis(inst);
  return inst;
}

CrbdsInstance gen_random_crbds(int k, int per_color, int num_blue,
                               double edge_prob, unsigned seed) {
  if (k < 1 || per_color < 2 || num_blue < 1)
    throw ContractViolation("need k >= 1, per_color >= 2, num_blue >= 1");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw ContractViolation("edge_prob must be a probability");

  CrbdsInstance inst;
  inst.num_red = k * per_color;
  inst.num_blue = num_blue;
  inst.k = k;
  for (int c = 1; c <= k; ++c)
    for (int i = 0; i < per_color; ++i) inst.coloring.push_back(c);

  std::mt19937 rng(seed);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex r = 1; r <= inst.num_red; ++r)
    for (Vertex b = 1; b <= num_blue; ++b)
      if (rng() % 1000000 < static_cast<unsigned>(edge_prob * 1000000))
        edges.insert({r, b});

  for (Vertex b = 1; b <= num_blue; ++b) {
    int degree = 0;
    for (Vertex r = 1; r <= inst.num_red; ++r) degree += edges.count({r, b});
    for (Vertex r = 1; r <= inst.num_red && degree < 2; ++r)
      if (edges.insert({r, b}).second) ++degree;
  }
  inst.edges.assign(edges.begin(), edges.end());
  validate_crbds(inst);
  return inst;
}

}  // namespace happy
