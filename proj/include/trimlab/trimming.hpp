#ifndef TRIMLAB_TRIMMING_HPP
#define TRIMLAB_TRIMMING_HPP

#include <span>
#include <string>
#include <vector>

#include "trimlab/embedding.hpp"
#include "trimlab/graph.hpp"
#include "trimlab/rational.hpp"

namespace trimlab {

struct TrimParams {
  int t = 2;  // weight fraction: the removed set weighs at most W/t
  int s = 0;  // elongation of the decomposition used
  int k = 0;  // width of the decomposition used
  BigInt g;   // every simple path avoiding the removed set has <= g edges
};

struct LevelBound {
  BigInt a;  // branching factor of the path-spanned subtree
  BigInt g;
};

// a = k+1 when s >= 2, else ceil(k/2);
// g = (2(s+1)t - 3)(k+1)                          when a <= 1,
// g = (a^((s+1)t-2) (a+1) - 2)(k+1) / (a-1)       when a >= 2.
// k = -1 (empty decomposition) is accepted and yields g = 0.
LevelBound g_bound(int k, int s, int t);

struct LevelTrimming {
  VertexSet removed;
  TrimParams params;
  int residue = 0;  // chosen depth residue modulo (s+1)t
  Rational removed_weight;
  // Weight of the union of bags at depths congruent to each residue.
  std::vector<Rational> residue_weights;
};

// Removes the union of all bags at depths d with d mod (s+1)t == i, for the
// lightest residue i (smallest on ties). The decomposition is rooted at
// d.root. Throws StructuralError if `d` is not a tree decomposition of `g`.
LevelTrimming level_trimming(const WeightedGraph& g, const TreeDecomposition& d, int t);

// weight(U) <= W/t and every simple path of more than g edges meets U.
// Uses the brute-force longest-path oracle (size-guarded).
bool is_trimming(const WeightedGraph& g, std::span<const int> removed, int t,
                 const BigInt& max_path);

struct DegreeBound {
  BigInt K;  // width bound of the underlying domino decomposition
  BigInt g;
};

// K = (9k+7)d(d+1) - 1, g = ceil(K/2)^(2t).
DegreeBound twdeg_g_bound(int k, int d, int t);
// K = (54t-29)d(d+1) - 1, g = ceil(K/2)^(4t).
DegreeBound planar_g_bound(int d, int t);

struct RemarkBound {
  BigInt K;      // (27 alpha t - 29)d(d+1) - 1
  int exponent;  // 2 ceil(alpha t / (alpha - 1))
  BigInt bound;  // ceil(K/2)^exponent
};

// Requires alpha > 2 and 27 alpha t integral; std::invalid_argument otherwise.
RemarkBound remark_bound(int d, int t, const Rational& alpha);

// Outer-face peeling layers R1, R2, ... (index 0 holds R1).
std::vector<VertexSet> planar_layers(const WeightedGraph& g, const PlaneEmbedding& e);

struct BakerSelection {
  int residue = 0;
  VertexSet removed;  // all layers R_i with i mod 2t == residue
  Rational removed_weight;
  std::vector<Rational> residue_weights;
  InducedSubgraph remaining;
};

// Layer indices are 1-based: layers[0] is R1.
BakerSelection baker_select(const WeightedGraph& g, const std::vector<VertexSet>& layers,
                            int t);

struct PlanarTrimming {
  VertexSet removed;
  Rational removed_weight;
  int layer_count = 0;
  int baker_residue = 0;
  Rational baker_weight;
  // Parameters of the level trimming run on the layered remainder; t here is
  // the inner fraction 2t and g bounds paths of the whole graph minus
  // `removed`.
  TrimParams params;
};

enum class PlanarDecomposition { kExactTiny, kMinFill, kAuto };

PlanarTrimming planar_trimming(const WeightedGraph& g, const PlaneEmbedding& e, int t,
                               PlanarDecomposition mode = PlanarDecomposition::kAuto);

struct TrimReport {
  Rational total_weight;
  int t = 2;
  int k = 0;
  int s = 0;
  BigInt g;
  VertexSet removed;
  Rational removed_weight;
};

// "trim-report" text block, exact fractions only.
std::string format_trim_report(const TrimReport& r);

}  // namespace trimlab

#endif  // TRIMLAB_TRIMMING_HPP
