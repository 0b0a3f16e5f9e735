#include "trimlab/generators.hpp"

#include <algorithm>
#include <set>

namespace trimlab {

int Generator::uniform(int lo, int hi) {
  if (hi <= lo) return lo;
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

bool Generator::coin(int num, int den) { return uniform(0, den - 1) < num; }

Rational Generator::grid(const Rational& lo, const Rational& hi, int den) {
  const BigInt steps = ((hi - lo) * Rational(den)).floor();
  const int k = uniform(0, static_cast<int>(steps.get_si()));
  return lo + Rational(k) / Rational(den);
}

Generator::GraphCase Generator::graph_with_decomposition(int max_n) {
  const int n = uniform(0, std::max(0, max_n));
  const int m = uniform(1, std::max(1, n));
  TreeDecomposition d;
  d.bags.assign(m, {});
  std::vector<std::vector<int>> tree(m);
  for (int x = 1; x < m; ++x) {
    const int parent = uniform(0, x - 1);
    d.tree_edges.emplace_back(parent, x);
    tree[parent].push_back(x);
    tree[x].push_back(parent);
  }
  d.root = uniform(0, m - 1);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nodes{uniform(0, m - 1)};
    const int target = uniform(1, std::min(m, 4));
    for (int tries = 0; static_cast<int>(nodes.size()) < target && tries < 12; ++tries) {
      const int from = nodes[uniform(0, static_cast<int>(nodes.size()) - 1)];
      if (tree[from].empty()) break;
      const int to = tree[from][uniform(0, static_cast<int>(tree[from].size()) - 1)];
      if (std::find(nodes.begin(), nodes.end(), to) == nodes.end()) nodes.push_back(to);
    }
    for (int x : nodes) d.bags[x].push_back(v);
  }
  std::set<std::pair<int, int>> edges;
  const int density = uniform(1, 4);
  for (const auto& bag : d.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        if (coin(density, 4)) edges.emplace(std::min(bag[i], bag[j]), std::max(bag[i], bag[j]));
      }
    }
  }
  static const Rational kWeights[] = {Rational(0), Rational(1, 2), Rational(1), Rational(1),
                                      Rational(1), Rational(2), Rational(3)};
  std::vector<Rational> weights;
  for (int v = 0; v < n; ++v) weights.push_back(kWeights[uniform(0, 6)]);
  for (auto& bag : d.bags) std::sort(bag.begin(), bag.end());
  return {WeightedGraph(std::move(weights), {edges.begin(), edges.end()}), std::move(d)};
}

LabelInstance Generator::instance(int n) {
  std::vector<LabelPoint> points;
  std::set<std::pair<Rational, Rational>> used;
  const Rational width(std::max(2, n));
  while (static_cast<int>(points.size()) < n) {
    LabelPoint p;
    p.x = grid(Rational(0), width, 4);
    p.y = grid(Rational(0), Rational(2), 4);
    if (!used.emplace(p.x, p.y).second) continue;
    p.length = grid(Rational(1, 2), Rational(3), 2);
    p.weight = Rational(uniform(1, 5));
    points.push_back(p);
  }
  return make_instance(std::move(points));
}

Labeling Generator::feasible_labeling(const LabelInstance& inst) {
  std::vector<int> order(inst.size());
  for (int i = 0; i < inst.size(); ++i) order[i] = i;
  for (int i = inst.size() - 1; i > 0; --i) std::swap(order[i], order[uniform(0, i)]);
  Labeling lab;
  for (int id : order) {
    if (coin(1, 8)) continue;
    const LabelPoint& p = inst[id];
    const Rational lo = p.x - p.length;
    // Window ends and positions touching a placed label come first; grid
    // positions follow.
    std::vector<Rational> special{lo, p.x};
    for (const auto& [qid, zq] : lab.z) {
      const LabelPoint& q = inst[qid];
      if (!y_overlap(p, q)) continue;
      special.push_back(zq + q.length);
      special.push_back(zq - p.length);
    }
    std::vector<Rational> options = special;
    for (Rational z = lo; z <= p.x; z += Rational(1, 4)) options.push_back(z);
    auto fits = [&](const Rational& z) {
      if (z < lo || z > p.x) return false;
      for (const auto& [qid, zq] : lab.z) {
        const LabelPoint& q = inst[qid];
        if (y_overlap(p, q) && !(z + p.length <= zq || zq + q.length <= z)) return false;
      }
      return true;
    };
    auto feasible_of = [&](std::vector<Rational> zs) {
      std::sort(zs.begin(), zs.end());
      zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
      std::vector<Rational> out;
      for (const Rational& z : zs) {
        if (fits(z)) out.push_back(z);
      }
      return out;
    };
    const std::vector<Rational> all = feasible_of(options);
    if (all.empty()) continue;
    const std::vector<Rational> touching = feasible_of(special);
    const int mode = uniform(0, 2);
    const std::vector<Rational>& pool = mode == 1 && !touching.empty() ? touching : all;
    const Rational z = mode == 0 ? all.front() : pool[uniform(0, static_cast<int>(pool.size()) - 1)];
    lab.z.emplace(id, z);
  }
  return lab;
}

AnchorLabelInstance Generator::anchor_instance(int n, int max_anchors) {
  AnchorLabelInstance out;
  out.base = instance(n);
  out.anchors.resize(n);
  for (const LabelPoint& p : out.base.points) {
    const int count = uniform(1, std::max(1, max_anchors));
    for (int i = 0; i < count; ++i) {
      Anchor a;
      a.edge = static_cast<Edge>(uniform(0, 3));
      const bool horizontal = a.edge == Edge::kBottom || a.edge == Edge::kTop;
      a.offset = grid(Rational(0), horizontal ? p.length : p.height, 4);
      if (std::find(out.anchors[p.id].begin(), out.anchors[p.id].end(), a) ==
          out.anchors[p.id].end()) {
        out.anchors[p.id].push_back(a);
      }
    }
  }
  return out;
}

}  // namespace trimlab
