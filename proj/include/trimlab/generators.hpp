#ifndef TRIMLAB_GENERATORS_HPP
#define TRIMLAB_GENERATORS_HPP

#include <random>

#include "trimlab/graph.hpp"
#include "trimlab/labeling.hpp"

namespace trimlab {

// Seeded random inputs on coarse rational grids. Identical seeds give
// identical outputs on every platform (no std distributions are used).
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin(int num, int den);
  // lo + k/den for a uniform k with the result in [lo, hi].
  Rational grid(const Rational& lo, const Rational& hi, int den);

  // Graph with 0..max_n vertices and a valid tree decomposition of it,
  // built by growing random connected occurrence subtrees in a random tree
  // and drawing edges inside bags. Weights are small nonnegative rationals.
  struct GraphCase {
    WeightedGraph graph;
    TreeDecomposition decomposition;
  };
  GraphCase graph_with_decomposition(int max_n);

  // n points, coordinates in quarter units, lengths in half units up to 3,
  // integer weights 1..5; points are distinct.
  LabelInstance instance(int n);

  // Random feasible labeling: points in random order, each placed (or
  // skipped) at a random feasible position, biased toward touching
  // positions.
  Labeling feasible_labeling(const LabelInstance& inst);

  // Random 4M instance with 1..max_anchors anchors per point.
  AnchorLabelInstance anchor_instance(int n, int max_anchors);

 private:
  std::mt19937_64 rng_;
};

}  // namespace trimlab

#endif  // TRIMLAB_GENERATORS_HPP
