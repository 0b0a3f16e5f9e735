#ifndef TRIMLAB_GRAPH_HPP
#define TRIMLAB_GRAPH_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trimlab/rational.hpp"

namespace trimlab {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

VertexSet make_vertex_set(std::vector<int> vs);

// Undirected simple graph with nonnegative exact vertex weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Unit weights.
  WeightedGraph(int vertex_count, std::vector<std::pair<int, int>> edges);
  WeightedGraph(std::vector<Rational> weights,
                std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(weights_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Rational& weight(int v) const { return weights_.at(v); }
  const std::vector<Rational>& weights() const { return weights_; }
  // Each edge once, as (u, v) with u < v, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  Rational total_weight() const;
  Rational weight_of(std::span<const int> vs) const;

 private:
  std::vector<Rational> weights_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

struct InducedSubgraph {
  WeightedGraph graph;
  // original[i] is the vertex of the parent graph that became vertex i.
  std::vector<int> original;
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const int> keep);
// G - U: the subgraph induced by every vertex not in `removed`.
InducedSubgraph remove_vertices(const WeightedGraph& g, std::span<const int> removed);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex.
std::vector<VertexSet> connected_components(const WeightedGraph& g);

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int root = 0;

  int node_count() const { return static_cast<int>(bags.size()); }
};

// Empty report iff `d` is a tree decomposition of `g`. Throws
// StructuralError when a node or vertex index is out of range.
std::vector<std::string> validate_tree_decomposition(const WeightedGraph& g,
                                                     const TreeDecomposition& d);

// Max bag size minus one; -1 for a decomposition without nodes.
int width(const TreeDecomposition& d);

// Largest tree distance between two nodes whose bags intersect. Requires the
// tree edges to form a tree (StructuralError otherwise).
int elongation(const TreeDecomposition& d);

// Depth of every node below d.root.
std::vector<int> node_depths(const TreeDecomposition& d);

// Exact number of edges on a longest simple path. Exponential in the size of
// the largest connected component; refuses components above `max_component`
// vertices with SizeGuardError.
int longest_simple_path(const WeightedGraph& g, int max_component = 20);

enum class DecompositionMode { kExactTiny, kMinFill };

// Exact mode searches all elimination orders (subset DP) and refuses graphs
// with more than kExactTinyLimit vertices.
inline constexpr int kExactTinyLimit = 16;

TreeDecomposition build_tree_decomposition(const WeightedGraph& g,
                                           DecompositionMode mode);

// Minimum width over all elimination orders, by subset DP.
int exact_treewidth(const WeightedGraph& g);

// Tree decomposition whose bags follow an elimination order. Bags that are
// subsets of a neighbouring bag are contracted away.
TreeDecomposition decomposition_from_elimination_order(const WeightedGraph& g,
                                                       std::span<const int> order);

// Standard families used by tests, benchmarks and the CLI.
WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
WeightedGraph complete_graph(int n);
WeightedGraph grid_graph(int rows, int cols);
// Rim 0..n-1 plus centre n.
WeightedGraph wheel_graph(int rim);

}  // namespace trimlab

#endif  // TRIMLAB_GRAPH_HPP
