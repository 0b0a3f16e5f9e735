// Brute-force reference implementations used only by the tests. They are
// written independently of the library algorithms they check.
#ifndef TRIMLAB_TESTS_ORACLES_HPP
#define TRIMLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "trimlab/graph.hpp"
#include "trimlab/labeling.hpp"

namespace oracle {

using trimlab::BigInt;
using trimlab::Rational;

// Longest simple path by depth-first enumeration of all simple paths.
inline int dfs_longest_path(const trimlab::WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> on(n, 0);
  int best = 0;
  std::function<void(int, int)> go = [&](int v, int len) {
    best = std::max(best, len);
    for (int w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      go(w, len + 1);
      on[w] = 0;
    }
  };
  for (int v = 0; v < n; ++v) {
    on[v] = 1;
    go(v, 0);
    on[v] = 0;
  }
  return best;
}

// Longest simple path via reachability over (visited set, endpoint) pairs,
// stored as one bitmask of endpoints per visited set.
inline int subset_longest_path(const trimlab::WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<std::uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  int best = 0;
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    best = std::max(best, __builtin_popcount(mask) - 1);
    for (int v = 0; v < n; ++v) {
      if (!(e >> v & 1u)) continue;
      std::uint32_t next = nb[v] & ~mask;
      while (next) {
        const int w = __builtin_ctz(next);
        next &= next - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return best;
}

// g written as the explicit path-count sum: a path avoiding the removed
// level meets at most D = (s+1)t - 2 consecutive levels below its top bag,
// each branching at most a ways.
inline BigInt level_g(int k, int s, int t) {
  const BigInt a = s >= 2 ? BigInt(k + 1) : BigInt((k + 1) / 2);
  const int depth = (s + 1) * t - 2;
  if (a <= 1) return BigInt(2 * depth + 1) * (k + 1);
  BigInt sum = 1;
  BigInt term = a + 1;
  for (int j = 1; j <= depth; ++j) {
    sum += term;
    term *= a;
  }
  return sum * (k + 1);
}

inline BigInt power(BigInt b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline BigInt ceil_half(const BigInt& k) { return (k + 1) / 2; }

// Width of a best elimination order found by trying every permutation.
inline int permutation_treewidth(const trimlab::WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  int best = n;
  do {
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
      adj[u].insert(v);
      adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    int w = 0;
    for (int v : order) {
      std::vector<int> live;
      for (int x : adj[v]) {
        if (!gone[x]) live.push_back(x);
      }
      w = std::max(w, static_cast<int>(live.size()));
      for (int a : live) {
        for (int b : live) {
          if (a != b) adj[a].insert(b);
        }
      }
      gone[v] = 1;
    }
    best = std::min(best, w);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Direct pairwise check of the labeling definition.
inline bool feasible(const trimlab::LabelInstance& inst, const std::vector<int>& ids,
                     const std::vector<Rational>& z) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& p = inst[ids[i]];
    if (z[i] > p.x || z[i] < p.x - p.length) return false;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& q = inst[ids[j]];
      Rational dy = p.y - q.y;
      if (dy.sign() < 0) dy = -dy;
      if (dy >= Rational(1)) continue;
      if (!(z[i] + p.length <= z[j] || z[j] + q.length <= z[i])) return false;
    }
  }
  return true;
}

// 1SH optimum by trying every assignment of every subset to positions from
// `grid`, where the grid must contain an optimal solution's positions.
inline Rational grid_optimum(const trimlab::LabelInstance& inst, const std::vector<Rational>& grid) {
  const int n = inst.size();
  Rational best(0);
  std::vector<int> ids;
  std::vector<Rational> z;
  std::function<void(int, Rational)> go = [&](int i, Rational w) {
    if (i == n) {
      best = std::max(best, w);
      return;
    }
    go(i + 1, w);
    const auto& p = inst[i];
    for (const Rational& x : grid) {
      if (x > p.x || x < p.x - p.length) continue;
      ids.push_back(i);
      z.push_back(x);
      if (feasible(inst, ids, z)) go(i + 1, w + p.weight);
      ids.pop_back();
      z.pop_back();
    }
  };
  go(0, Rational(0));
  return best;
}

// All values x + (sum of a sub-multiset of lengths of size <= g) by
// brute-force recursion over sequences.
inline std::set<Rational> sequence_sums(const std::vector<Rational>& base,
                                        const std::vector<Rational>& lengths, int g) {
  std::set<Rational> out;
  std::function<void(const Rational&, int)> go = [&](const Rational& v, int left) {
    out.insert(v);
    if (left == 0) return;
    for (const Rational& l : lengths) go(v + l, left - 1);
  };
  for (const Rational& x : base) go(x, g);
  return out;
}

}  // namespace oracle

#endif  // TRIMLAB_TESTS_ORACLES_HPP
