#include "trimlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>

#include "trimlab/errors.hpp"

namespace trimlab {

VertexSet make_vertex_set(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

WeightedGraph::WeightedGraph(int vertex_count,
                             std::vector<std::pair<int, int>> edges)
    : WeightedGraph(std::vector<Rational>(std::max(vertex_count, 0), Rational(1)),
                    std::move(edges)) {}

WeightedGraph::WeightedGraph(std::vector<Rational> weights,
                             std::vector<std::pair<int, int>> edges)
    : weights_(std::move(weights)) {
  const int n = vertex_count();
  for (const Rational& w : weights_) {
    if (w.sign() < 0) throw StructuralError("negative vertex weight");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw StructuralError("edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} out of range");
    }
    if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw StructuralError("duplicate edge");
  }
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

int WeightedGraph::max_degree() const {
  int d = 0;
  for (const auto& nb : adjacency_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

bool WeightedGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= vertex_count()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Rational WeightedGraph::total_weight() const {
  Rational sum;
  for (const Rational& w : weights_) sum += w;
  return sum;
}

Rational WeightedGraph::weight_of(std::span<const int> vs) const {
  Rational sum;
  for (int v : vs) sum += weights_.at(v);
  return sum;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const int> keep) {
  std::vector<int> local(g.vertex_count(), -1);
  InducedSubgraph out;
  out.original.assign(keep.begin(), keep.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()),
                     out.original.end());
  std::vector<Rational> weights;
  for (int i = 0; i < static_cast<int>(out.original.size()); ++i) {
    local.at(out.original[i]) = i;
    weights.push_back(g.weight(out.original[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  }
  out.graph = WeightedGraph(std::move(weights), std::move(edges));
  return out;
}

InducedSubgraph remove_vertices(const WeightedGraph& g, std::span<const int> removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : removed) gone.at(v) = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    VertexSet c;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      c.push_back(v);
      for (int u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string vname(int v) { return "v" + std::to_string(v); }
std::string xname(int x) { return "x" + std::to_string(x); }

void check_decomposition_indices(const WeightedGraph& g, const TreeDecomposition& d) {
  const int m = d.node_count();
  for (int x = 0; x < m; ++x) {
    for (int v : d.bags[x]) {
      if (v < 0 || v >= g.vertex_count()) {
        throw StructuralError("bag of node " + std::to_string(x) +
                              " holds out-of-range vertex " + std::to_string(v));
      }
    }
  }
  for (auto [a, b] : d.tree_edges) {
    if (a < 0 || b < 0 || a >= m || b >= m) {
      throw StructuralError("tree edge {" + std::to_string(a) + "," +
                            std::to_string(b) + "} out of range");
    }
  }
  if (m > 0 && (d.root < 0 || d.root >= m)) {
    throw StructuralError("root " + std::to_string(d.root) + " out of range");
  }
}

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& d) {
  std::vector<std::vector<int>> adj(d.node_count());
  for (auto [a, b] : d.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

// Empty string if the tree edges form a tree on all nodes.
std::string tree_problem(const TreeDecomposition& d) {
  const int m = d.node_count();
  if (m == 0) {
    return d.tree_edges.empty() ? "" : "tree edges without nodes";
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : d.tree_edges) {
    if (a == b) return "tree edge loop at node " + xname(a);
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      return "duplicate tree edge {" + xname(a) + "," + xname(b) + "}";
    }
  }
  if (static_cast<int>(d.tree_edges.size()) != m - 1) {
    return "tree has " + std::to_string(d.tree_edges.size()) + " edges on " +
           std::to_string(m) + " nodes";
  }
  auto adj = tree_adjacency(d);
  std::vector<char> seen_node(m, 0);
  std::vector<int> stack{0};
  seen_node[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : adj[x]) {
      if (!seen_node[y]) {
        seen_node[y] = 1;
        stack.push_back(y);
      }
    }
  }
  if (count != m) return "tree edges do not connect all nodes";
  return "";
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

// Nodes on the tree path from a to b, inclusive.
std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int a, int b) {
  std::vector<int> parent(adj.size(), -1);
  std::queue<int> q;
  parent[a] = a;
  q.push(a);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (parent[y] < 0) {
        parent[y] = x;
        q.push(y);
      }
    }
  }
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::string> validate_tree_decomposition(const WeightedGraph& g,
                                                     const TreeDecomposition& d) {
  check_decomposition_indices(g, d);
  std::vector<std::string> report;
  const int n = g.vertex_count();
  const int m = d.node_count();

  std::vector<std::vector<int>> occurrences(n);
  std::vector<std::vector<char>> in_bag(m, std::vector<char>(n, 0));
  for (int x = 0; x < m; ++x) {
    for (int v : d.bags[x]) {
      if (!in_bag[x][v]) occurrences[v].push_back(x);
      in_bag[x][v] = 1;
    }
  }

  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x : occurrences[u]) covered = covered || in_bag[x][v];
    if (!covered) report.push_back("edge {" + vname(u) + "," + vname(v) + "} uncovered");
  }
  for (int v = 0; v < n; ++v) {
    if (occurrences[v].empty()) report.push_back("vertex " + vname(v) + " uncovered");
  }

  if (std::string problem = tree_problem(d); !problem.empty()) {
    report.push_back("tree edges do not form a tree: " + problem);
    return report;
  }

  auto adj = tree_adjacency(d);
  for (int v = 0; v < n; ++v) {
    const auto& occ = occurrences[v];
    if (occ.size() < 2) continue;
    // Occurrence nodes reachable from the first one inside the subtree of
    // nodes containing v.
    std::vector<char> reached(m, 0);
    std::vector<int> stack{occ[0]};
    reached[occ[0]] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (!reached[y] && in_bag[y][v]) {
          reached[y] = 1;
          stack.push_back(y);
        }
      }
    }
    for (int z : occ) {
      if (reached[z]) continue;
      for (int y : tree_path(adj, occ[0], z)) {
        if (!in_bag[y][v]) {
          report.push_back("vertex " + vname(v) + " occurrences disconnected: nodes " +
                           xname(occ[0]) + " and " + xname(z) + " contain it, node " +
                           xname(y) + " on the path between does not");
          break;
        }
      }
      break;
    }
  }
  return report;
}

int width(const TreeDecomposition& d) {
  int w = -1;
  for (const auto& bag : d.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

int elongation(const TreeDecomposition& d) {
  if (std::string problem = tree_problem(d); !problem.empty()) {
    throw StructuralError("elongation of a non-tree decomposition: " + problem);
  }
  const int m = d.node_count();
  if (m <= 1) return 0;
  auto adj = tree_adjacency(d);
  int max_vertex = -1;
  for (const auto& bag : d.bags) {
    for (int v : bag) max_vertex = std::max(max_vertex, v);
  }
  std::vector<std::vector<int>> occurrences(max_vertex + 1);
  for (int x = 0; x < m; ++x) {
    for (int v : d.bags[x]) occurrences[v].push_back(x);
  }
  int best = 0;
  std::vector<std::vector<int>> dist(m);
  for (const auto& occ : occurrences) {
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (dist[occ[i]].empty()) dist[occ[i]] = bfs_distances(adj, occ[i]);
      for (std::size_t j = i + 1; j < occ.size(); ++j) {
        best = std::max(best, dist[occ[i]][occ[j]]);
      }
    }
  }
  return best;
}

std::vector<int> node_depths(const TreeDecomposition& d) {
  if (std::string problem = tree_problem(d); !problem.empty()) {
    throw StructuralError("depths of a non-tree decomposition: " + problem);
  }
  if (d.node_count() == 0) return {};
  if (d.root < 0 || d.root >= d.node_count()) {
    throw StructuralError("root " + std::to_string(d.root) + " out of range");
  }
  return bfs_distances(tree_adjacency(d), d.root);
}

int longest_simple_path(const WeightedGraph& g, int max_component) {
  int best = 0;
  for (const VertexSet& comp : connected_components(g)) {
    const int c = static_cast<int>(comp.size());
    if (c <= 1) continue;
    if (c > max_component) {
      throw SizeGuardError("longest_simple_path: component of " + std::to_string(c) +
                           " vertices exceeds the limit of " +
                           std::to_string(max_component));
    }
    if (best == c - 1) continue;
    std::vector<uint32_t> adj(c, 0);
    for (int i = 0; i < c; ++i) {
      for (int u : g.neighbors(comp[i])) {
        auto it = std::lower_bound(comp.begin(), comp.end(), u);
        adj[i] |= uint32_t{1} << (it - comp.begin());
      }
    }
    // ends[mask] = set of vertices at which a simple path covering exactly
    // `mask` can end.
    std::vector<uint32_t> ends(std::size_t{1} << c, 0);
    for (int i = 0; i < c; ++i) ends[uint32_t{1} << i] = uint32_t{1} << i;
    for (uint32_t mask = 1; mask < ends.size(); ++mask) {
      uint32_t e = ends[mask];
      if (e == 0) continue;
      best = std::max(best, std::popcount(mask) - 1);
      while (e) {
        int v = std::countr_zero(e);
        e &= e - 1;
        uint32_t next = adj[v] & ~mask;
        while (next) {
          int u = std::countr_zero(next);
          next &= next - 1;
          ends[mask | (uint32_t{1} << u)] |= uint32_t{1} << u;
        }
      }
    }
  }
  return best;
}

namespace {

// Vertices outside S and v reachable from v through S (the degree of v when
// it is eliminated right after S).
int elimination_degree(const std::vector<uint32_t>& adj, uint32_t s, int v) {
  uint32_t visited = uint32_t{1} << v;
  uint32_t frontier = visited;
  uint32_t outside = 0;
  while (frontier) {
    int x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    uint32_t nb = adj[x] & ~visited;
    visited |= nb;
    outside |= nb & ~s;
    frontier |= nb & s;
  }
  return std::popcount(outside);
}

std::vector<int> exact_elimination_order(const WeightedGraph& g, int* width_out) {
  const int n = g.vertex_count();
  if (n > kExactTinyLimit) {
    throw SizeGuardError("exact tree decomposition limited to " +
                         std::to_string(kExactTinyLimit) + " vertices, got " +
                         std::to_string(n));
  }
  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint32_t{1} << v;
    adj[v] |= uint32_t{1} << u;
  }
  const uint32_t full = n == 0 ? 0 : (n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  std::vector<int> tw(std::size_t{full} + 1, -1);
  std::vector<int8_t> last(std::size_t{full} + 1, -1);
  for (uint32_t s = 1; s <= full && s != 0; ++s) {
    int best = n + 1;
    int arg = -1;
    uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t without = s & ~(uint32_t{1} << v);
      int cand = std::max(tw[without], elimination_degree(adj, without, v));
      if (cand < best) {
        best = cand;
        arg = v;
      }
    }
    tw[s] = best;
    last[s] = static_cast<int8_t>(arg);
  }
  if (width_out) *width_out = tw[full];
  std::vector<int> order;
  for (uint32_t s = full; s != 0; s &= ~(uint32_t{1} << last[s])) {
    order.push_back(last[s]);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<int> min_fill_order(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
        for (auto b = std::next(a); b != adj[v].end(); ++b) {
          if (!adj[*a].count(*b)) ++fill;
        }
      }
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    gone[best] = 1;
    order.push_back(best);
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (int a : nb) {
      adj[a].erase(best);
      for (int b : nb) {
        if (a != b) adj[a].insert(b);
      }
    }
    adj[best].clear();
  }
  return order;
}

}  // namespace

int exact_treewidth(const WeightedGraph& g) {
  int w = -1;
  exact_elimination_order(g, &w);
  return w;
}

TreeDecomposition decomposition_from_elimination_order(const WeightedGraph& g,
                                                       std::span<const int> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw StructuralError("elimination order must list every vertex once");
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) {
      throw StructuralError("elimination order must list every vertex once");
    }
    pos[order[i]] = i;
  }
  if (n == 0) return {};

  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  // Node i belongs to the i-th eliminated vertex.
  std::vector<std::set<int>> bag(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    bag[i] = adj[v];
    bag[i].insert(v);
    int first = n;
    for (int u : adj[v]) first = std::min(first, pos[u]);
    if (first < n) parent[i] = first;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (int a : nb) {
      adj[a].erase(v);
      for (int b : nb) {
        if (a != b) adj[a].insert(b);
      }
    }
  }

  // Component roots hang off the first one, so disconnected graphs give a
  // shallow star of components instead of a chain.
  std::vector<std::set<int>> tree(n);
  int hub = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      tree[i].insert(parent[i]);
      tree[parent[i]].insert(i);
    } else if (hub < 0) {
      hub = i;
    } else {
      tree[i].insert(hub);
      tree[hub].insert(i);
    }
  }

  // Contract every node whose bag is contained in a neighbour's bag.
  std::vector<char> alive(n, 1);
  std::vector<int> absorbed_by(n, -1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      for (int y : tree[x]) {
        if (!std::includes(bag[y].begin(), bag[y].end(), bag[x].begin(), bag[x].end())) {
          continue;
        }
        for (int z : tree[x]) {
          if (z == y) continue;
          tree[z].erase(x);
          tree[z].insert(y);
          tree[y].insert(z);
        }
        tree[y].erase(x);
        tree[x].clear();
        alive[x] = 0;
        absorbed_by[x] = y;
        changed = true;
        break;
      }
    }
  }

  std::vector<int> renumber(n, -1);
  TreeDecomposition d;
  for (int x = 0; x < n; ++x) {
    if (!alive[x]) continue;
    renumber[x] = d.node_count();
    d.bags.emplace_back(bag[x].begin(), bag[x].end());
  }
  for (int x = 0; x < n; ++x) {
    if (!alive[x]) continue;
    for (int y : tree[x]) {
      if (x < y) d.tree_edges.emplace_back(renumber[x], renumber[y]);
    }
  }
  std::sort(d.tree_edges.begin(), d.tree_edges.end());
  while (absorbed_by[hub] >= 0) hub = absorbed_by[hub];
  d.root = renumber[hub];
  return d;
}

TreeDecomposition build_tree_decomposition(const WeightedGraph& g,
                                           DecompositionMode mode) {
  std::vector<int> order = mode == DecompositionMode::kExactTiny
                               ? exact_elimination_order(g, nullptr)
                               : min_fill_order(g);
  return decomposition_from_elimination_order(g, order);
}

WeightedGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return WeightedGraph(n, e);
}

WeightedGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return WeightedGraph(n, e);
}

WeightedGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return WeightedGraph(n, e);
}

WeightedGraph grid_graph(int rows, int cols) {
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  }
  return WeightedGraph(rows * cols, e);
}

WeightedGraph wheel_graph(int rim) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return WeightedGraph(rim + 1, e);
}

}  // namespace trimlab
