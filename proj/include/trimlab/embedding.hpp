#ifndef TRIMLAB_EMBEDDING_HPP
#define TRIMLAB_EMBEDDING_HPP

#include <span>
#include <utility>
#include <vector>

#include "trimlab/graph.hpp"
#include "trimlab/rational.hpp"

namespace trimlab {

struct Dart {
  int from = 0;
  int to = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Combinatorial plane embedding.
struct PlaneEmbedding {
  // Neighbours of each vertex in counterclockwise order.
  std::vector<std::vector<int>> rotation;
  // One dart per connected component that has edges; the face to the left of
  // that dart is the component's outer face.
  std::vector<Dart> outer;
  // Components drawn inside a bounded face of another component, given as
  // (some vertex of the nested component, a dart of the enclosing face).
  // Components not listed sit in the unbounded face.
  std::vector<std::pair<int, Dart>> nested;
};

// Faces traced with the "face on the left" rule: the successor of dart
// (u, v) is (v, w) where w precedes u in the counterclockwise rotation at v.
// Bounded faces of a straight-line drawing are therefore counterclockwise.
struct FaceStructure {
  std::vector<std::vector<Dart>> faces;
  // face_of[v][i] is the face of dart (v, rotation[v][i]).
  std::vector<std::vector<int>> face_of;

  int face_of_dart(const PlaneEmbedding& e, Dart d) const;
};

// Throws StructuralError unless `e` is a genus-0 rotation system of `g` with
// a valid outer dart per component (Euler's formula is checked per
// component).
FaceStructure trace_faces(const WeightedGraph& g, const PlaneEmbedding& e);

// Straight-line embedding from exact coordinates. Throws StructuralError if
// the drawing is not plane (coincident vertices, crossing or overlapping
// edges, a vertex inside an edge). Nesting of components is derived from the
// geometry.
PlaneEmbedding embedding_from_coordinates(const WeightedGraph& g,
                                          std::span<const Rational> xs,
                                          std::span<const Rational> ys);

// Desk-scale exhaustive search over rotation systems (at most
// kEmbeddingSearchLimit vertices). Components are placed side by side; each
// outer face is the face left of the dart from the component's lowest vertex
// to its first rotation neighbour. Throws StructuralError for non-planar
// graphs and SizeGuardError above the limits.
inline constexpr int kEmbeddingSearchLimit = 10;
PlaneEmbedding find_planar_embedding(const WeightedGraph& g);

}  // namespace trimlab

#endif  // TRIMLAB_EMBEDDING_HPP
