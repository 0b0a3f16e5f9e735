#ifndef TRIMLAB_DISCRETIZATION_HPP
#define TRIMLAB_DISCRETIZATION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trimlab/geometry.hpp"
#include "trimlab/graph.hpp"
#include "trimlab/labeling.hpp"

namespace trimlab {

struct StoppingSet {
  enum Source : unsigned char { kUser = 1, kPoint = 2 };
  std::vector<Rational> values;        // sorted, distinct
  std::vector<unsigned char> sources;  // bitmask of Source per value
};

// S' = S plus p_x - l(p) and p_x for every point.
StoppingSet stopping_set(const LabelInstance& inst, std::span<const Rational> user);

// Number of elements of the sorted set `s` that are <= x.
std::size_t rank_in(std::span<const Rational> s, const Rational& x);

struct DependencyEdge {
  int from = 0;  // vertex indices into DependencyGraph::ids
  int to = 0;
  Rational length;  // l(from)
};

// Directed graph over the labeled points. The origin vertex is implicit:
// it has one edge to every point for every value of `origin_values`.
struct DependencyGraph {
  std::vector<int> ids;       // point id of each vertex, ascending
  std::vector<Point> coords;  // coordinates of each vertex
  std::vector<Rational> z;    // label position of each vertex
  std::vector<DependencyEdge> edges;
  std::vector<Rational> origin_values;

  int vertex_count() const { return static_cast<int>(ids.size()); }
};

// kOpen suppresses an edge only for stopping values strictly inside
// (z(p)+l(p), z(q)); it exists to check that the test suites notice the
// difference.
enum class IntervalRule { kClosed, kOpen };

// Edge (p, q) iff p_x < q_x, the labels y-overlap, and no stopping value lies
// in [z(p)+l(p), z(q)]. Throws StructuralError if the labeling is infeasible.
DependencyGraph dependency_graph(const LabelInstance& inst, const Labeling& lab,
                                 std::span<const Rational> stopping,
                                 IntervalRule rule = IntervalRule::kClosed);

struct StructureReport {
  int max_in_degree = 0;
  int max_out_degree = 0;
  std::vector<std::string> degree_violations;
  std::vector<std::string> triangle_violations;
  std::vector<std::pair<int, int>> crossing_pairs;  // edge indices
  bool acyclic = true;

  bool clean() const {
    return degree_violations.empty() && triangle_violations.empty() && crossing_pairs.empty() &&
           acyclic;
  }
};

// Degree <= 2 both ways; no edge (p, q) with a common neighbour c of p and q
// strictly between them in x; no two edges with four distinct endpoints whose
// closed segments meet; every edge increases x.
StructureReport check_structure(const DependencyGraph& g);

// Underlying undirected graph, weighted by point weights.
WeightedGraph undirected(const DependencyGraph& g, const LabelInstance& inst);

// Edges on a longest directed path among vertices not in `removed` (vertex
// indices). The graph must be acyclic.
int longest_directed_path(const DependencyGraph& g, std::span<const int> removed = {});

struct CandidateSet {
  std::vector<Rational> values;  // sorted, distinct
  int g = 0;
  std::size_t stopping_count = 0;  // |S'|
  std::size_t distinct_lengths = 0;
  BigInt size_bound;  // (2n + |S|)(n+1)^g
};

// M = { x + (sum of at most g label lengths, repetition allowed) : x in S' }.
// Throws BudgetError once the set would exceed `cap` values.
CandidateSet candidate_positions(const LabelInstance& inst, std::span<const Rational> user,
                                 int g, std::size_t cap);

// Whether `value` belongs to the set above, decided by search over length
// multisets instead of enumeration.
bool is_candidate(const LabelInstance& inst, std::span<const Rational> user, int g,
                  const Rational& value);

// Left-push of Q \ U in increasing z (ties by id): each label moves to the
// larger of the nearest stopping value at or left of it and the right ends of
// its already-placed dependency predecessors. Throws StructuralError if the
// labeling is infeasible or U contains an unlabeled point.
Labeling normalize(const LabelInstance& inst, const Labeling& lab, std::span<const Rational> user,
                   std::span<const int> removed, IntervalRule rule = IntervalRule::kClosed);

}  // namespace trimlab

#endif  // TRIMLAB_DISCRETIZATION_HPP
