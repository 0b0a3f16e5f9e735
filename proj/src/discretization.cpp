#include "trimlab/discretization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "trimlab/errors.hpp"

namespace trimlab {

namespace {

std::vector<Rational> sorted_unique(std::span<const Rational> values) {
  std::vector<Rational> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> distinct_lengths(const LabelInstance& inst) {
  std::vector<Rational> lengths;
  for (const LabelPoint& p : inst.points) lengths.push_back(p.length);
  return sorted_unique(lengths);
}

void require_feasible(const LabelInstance& inst, const Labeling& lab) {
  if (auto report = validate_labeling(inst, lab); !report.empty()) {
    throw StructuralError("labeling is infeasible: " + report.front());
  }
}

// Kahn order over the vertices with keep[v]; empty optional-like result
// (size mismatch) signals a cycle.
std::vector<int> topological_order(const DependencyGraph& g, const std::vector<char>& keep) {
  const int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const DependencyEdge& e : g.edges) {
    if (!keep[e.from] || !keep[e.to]) continue;
    out[e.from].push_back(e.to);
    ++indeg[e.to];
  }
  std::vector<int> order;
  std::vector<int> stack;
  for (int v = n - 1; v >= 0; --v) {
    if (keep[v] && indeg[v] == 0) stack.push_back(v);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : out[v]) {
      if (--indeg[w] == 0) stack.push_back(w);
    }
  }
  return order;
}

bool sum_reachable(const std::vector<Rational>& lengths, std::size_t from, const Rational& target,
                   int remaining) {
  if (target.sign() == 0) return true;
  if (remaining == 0 || lengths.empty()) return false;
  if (Rational(remaining) * lengths.back() < target) return false;
  for (std::size_t i = from; i < lengths.size(); ++i) {
    if (lengths[i] > target) break;
    if (sum_reachable(lengths, i, target - lengths[i], remaining - 1)) return true;
  }
  return false;
}

}  // namespace

StoppingSet stopping_set(const LabelInstance& inst, std::span<const Rational> user) {
  std::map<Rational, unsigned char> merged;
  for (const Rational& s : user) merged[s] |= StoppingSet::kUser;
  for (const LabelPoint& p : inst.points) {
    merged[p.x - p.length] |= StoppingSet::kPoint;
    merged[p.x] |= StoppingSet::kPoint;
  }
  StoppingSet out;
  for (const auto& [v, src] : merged) {
    out.values.push_back(v);
    out.sources.push_back(src);
  }
  return out;
}

std::size_t rank_in(std::span<const Rational> s, const Rational& x) {
  return static_cast<std::size_t>(std::upper_bound(s.begin(), s.end(), x) - s.begin());
}

DependencyGraph dependency_graph(const LabelInstance& inst, const Labeling& lab,
                                 std::span<const Rational> stopping, IntervalRule rule) {
  require_feasible(inst, lab);
  DependencyGraph g;
  g.origin_values = sorted_unique(stopping);
  for (const auto& [id, z] : lab.z) {
    g.ids.push_back(id);
    g.coords.push_back({inst[id].x, inst[id].y});
    g.z.push_back(z);
  }
  const auto& s = g.origin_values;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const LabelPoint& p = inst[g.ids[i]];
    for (int j = 0; j < g.vertex_count(); ++j) {
      const LabelPoint& q = inst[g.ids[j]];
      if (!(p.x < q.x) || !y_overlap(p, q)) continue;
      const Rational lo = g.z[i] + p.length;
      const Rational& hi = g.z[j];
      bool blocked = false;
      if (rule == IntervalRule::kClosed) {
        auto it = std::lower_bound(s.begin(), s.end(), lo);
        blocked = it != s.end() && *it <= hi;
      } else {
        auto it = std::upper_bound(s.begin(), s.end(), lo);
        blocked = it != s.end() && *it < hi;
      }
      if (!blocked) g.edges.push_back({i, j, p.length});
    }
  }
  return g;
}

StructureReport check_structure(const DependencyGraph& g) {
  StructureReport r;
  const int n = g.vertex_count();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const DependencyEdge& e : g.edges) {
    ++outdeg[e.from];
    ++indeg[e.to];
    adjacent[e.from][e.to] = adjacent[e.to][e.from] = 1;
    if (!(g.coords[e.from].x < g.coords[e.to].x)) r.acyclic = false;
  }
  for (int v = 0; v < n; ++v) {
    r.max_in_degree = std::max(r.max_in_degree, indeg[v]);
    r.max_out_degree = std::max(r.max_out_degree, outdeg[v]);
    if (indeg[v] > 2 || outdeg[v] > 2) {
      r.degree_violations.push_back("p" + std::to_string(g.ids[v]) + ": in-degree " +
                                    std::to_string(indeg[v]) + ", out-degree " +
                                    std::to_string(outdeg[v]));
    }
  }
  if (topological_order(g, std::vector<char>(n, 1)).size() != static_cast<std::size_t>(n)) {
    r.acyclic = false;
  }
  for (const DependencyEdge& e : g.edges) {
    const Rational& lo = g.coords[e.from].x;
    const Rational& hi = g.coords[e.to].x;
    for (int c = 0; c < n; ++c) {
      if (!adjacent[c][e.from] || !adjacent[c][e.to]) continue;
      const Rational& cx = g.coords[c].x;
      if ((lo < cx && cx < hi) || (hi < cx && cx < lo)) {
        r.triangle_violations.push_back("edge (p" + std::to_string(g.ids[e.from]) + ", p" +
                                        std::to_string(g.ids[e.to]) + ") x-surrounds p" +
                                        std::to_string(g.ids[c]));
      }
    }
  }
  for (std::size_t a = 0; a < g.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
      const DependencyEdge& e = g.edges[a];
      const DependencyEdge& f = g.edges[b];
      if (e.from == f.from || e.from == f.to || e.to == f.from || e.to == f.to) continue;
      if (segments_intersect(g.coords[e.from], g.coords[e.to], g.coords[f.from],
                             g.coords[f.to])) {
        r.crossing_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return r;
}

WeightedGraph undirected(const DependencyGraph& g, const LabelInstance& inst) {
  std::vector<Rational> weights;
  for (int id : g.ids) weights.push_back(inst[id].weight);
  std::set<std::pair<int, int>> edges;
  for (const DependencyEdge& e : g.edges) {
    edges.emplace(std::min(e.from, e.to), std::max(e.from, e.to));
  }
  return WeightedGraph(std::move(weights), {edges.begin(), edges.end()});
}

int longest_directed_path(const DependencyGraph& g, std::span<const int> removed) {
  const int n = g.vertex_count();
  std::vector<char> keep(n, 1);
  for (int v : removed) keep.at(v) = 0;
  const auto order = topological_order(g, keep);
  const auto kept = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), 1));
  if (order.size() != kept) throw StructuralError("dependency graph has a cycle");
  std::vector<std::vector<int>> out(n);
  for (const DependencyEdge& e : g.edges) {
    if (keep[e.from] && keep[e.to]) out[e.from].push_back(e.to);
  }
  std::vector<int> best(n, 0);
  int longest = 0;
  for (int v : order) {
    longest = std::max(longest, best[v]);
    for (int w : out[v]) best[w] = std::max(best[w], best[v] + 1);
  }
  return longest;
}

CandidateSet candidate_positions(const LabelInstance& inst, std::span<const Rational> user,
                                 int g, std::size_t cap) {
  if (g < 0) throw std::invalid_argument("candidate_positions requires g >= 0");
  const StoppingSet s = stopping_set(inst, user);
  const std::vector<Rational> lengths = distinct_lengths(inst);
  CandidateSet out;
  out.g = g;
  out.stopping_count = s.values.size();
  out.distinct_lengths = lengths.size();
  const int n = inst.size();
  out.size_bound = BigInt(2 * n + static_cast<int>(sorted_unique(user).size())) *
                   pow(BigInt(n + 1), static_cast<unsigned long>(g));

  std::set<Rational> m(s.values.begin(), s.values.end());
  if (m.size() > cap) throw BudgetError("candidate set exceeds cap of " + std::to_string(cap));
  std::set<Rational> sums{Rational(0)};
  std::vector<Rational> frontier{Rational(0)};
  for (int j = 1; j <= g && !frontier.empty() && !lengths.empty(); ++j) {
    std::vector<Rational> next;
    for (const Rational& t : frontier) {
      for (const Rational& l : lengths) {
        Rational u = t + l;
        if (!sums.insert(u).second) continue;
        for (const Rational& x : s.values) m.insert(x + u);
        if (m.size() > cap) {
          throw BudgetError("candidate set exceeds cap of " + std::to_string(cap) +
                            " values at g = " + std::to_string(j));
        }
        next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  out.values.assign(m.begin(), m.end());
  return out;
}

bool is_candidate(const LabelInstance& inst, std::span<const Rational> user, int g,
                  const Rational& value) {
  const StoppingSet s = stopping_set(inst, user);
  const std::vector<Rational> lengths = distinct_lengths(inst);
  for (const Rational& x : s.values) {
    if (x > value) break;
    if (sum_reachable(lengths, 0, value - x, g)) return true;
  }
  return false;
}

Labeling normalize(const LabelInstance& inst, const Labeling& lab, std::span<const Rational> user,
                   std::span<const int> removed, IntervalRule rule) {
  require_feasible(inst, lab);
  for (int id : removed) {
    if (!lab.z.contains(id)) {
      throw StructuralError("p" + std::to_string(id) + " is trimmed but not labeled");
    }
  }
  const StoppingSet s = stopping_set(inst, user);
  const DependencyGraph g = dependency_graph(inst, lab, s.values, rule);
  const int n = g.vertex_count();
  std::vector<char> keep(n, 1);
  for (int v = 0; v < n; ++v) {
    keep[v] = std::find(removed.begin(), removed.end(), g.ids[v]) == removed.end();
  }
  std::vector<std::vector<int>> preds(n);
  for (const DependencyEdge& e : g.edges) preds[e.to].push_back(e.from);

  std::vector<int> order;
  for (int v = 0; v < n; ++v) {
    if (keep[v]) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.z[a] != g.z[b]) return g.z[a] < g.z[b];
    return g.ids[a] < g.ids[b];
  });
  std::vector<Rational> pushed(n);
  std::vector<char> done(n, 0);
  Labeling out;
  for (int v : order) {
    const std::size_t r = rank_in(s.values, g.z[v]);
    // The window's left end is a stopping value, so r >= 1.
    Rational z = s.values.at(r - 1);
    for (int p : preds[v]) {
      if (!keep[p]) continue;
      if (!done[p]) throw std::logic_error("normalize: predecessor processed out of order");
      z = std::max(z, pushed[p] + inst[g.ids[p]].length);
    }
    if (z > g.z[v]) throw std::logic_error("normalize: label pushed to the right");
    pushed[v] = z;
    done[v] = 1;
    out.z.emplace(g.ids[v], z);
  }
  return out;
}

}  // namespace trimlab
