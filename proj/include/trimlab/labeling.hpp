#ifndef TRIMLAB_LABELING_HPP
#define TRIMLAB_LABELING_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "trimlab/rational.hpp"

namespace trimlab {

// A point with a sliding label of width `length`. Labels of ordinary
// instances have height 1; other heights only arise in transposed instances.
struct LabelPoint {
  Rational x, y;
  Rational length;
  Rational weight;
  int id = 0;
  Rational height{1};
};

struct LabelInstance {
  std::vector<LabelPoint> points;  // points[i].id == i

  int size() const { return static_cast<int>(points.size()); }
  const LabelPoint& operator[](int id) const { return points.at(id); }
};

// Builds an instance with ids 0..n-1 in the given order. Throws
// StructuralError for nonpositive length or height, negative weight, or two
// points at the same coordinates.
LabelInstance make_instance(std::vector<LabelPoint> points);

// The two points' bottom-anchored labels share an open horizontal band.
// For unit heights this is |p_y - q_y| < 1.
bool y_overlap(const LabelPoint& p, const LabelPoint& q);

// Labeled subset Q with left-edge x-coordinates z, keyed by point id.
struct Labeling {
  std::map<int, Rational> z;

  int size() const { return static_cast<int>(z.size()); }
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

// Empty iff every label is inside its window p_x - l(p) <= z(p) <= p_x and
// y-overlapping labels are separated (touching allowed). Throws
// StructuralError on an unknown id.
std::vector<std::string> validate_labeling(const LabelInstance& inst, const Labeling& lab);

Rational weight_of(const LabelInstance& inst, const Labeling& lab);

struct MultiPosInstance {
  LabelInstance base;
  // Sorted, duplicate-free position set per point.
  std::vector<std::vector<Rational>> positions;
};

// Every point draws from the same set M.
MultiPosInstance shared_positions(const LabelInstance& inst, std::vector<Rational> m);

std::vector<std::string> validate_multipos(const MultiPosInstance& inst, const Labeling& lab);

enum class Edge { kBottom, kTop, kLeft, kRight };

std::string_view edge_name(Edge e);
// Throws std::invalid_argument on an unknown name.
Edge parse_edge(std::string_view name);

// Position of the point on the label boundary. For bottom/top anchors the
// offset is measured from the label's left end (0..length); for left/right
// anchors from the label's bottom (0..height).
struct Anchor {
  Edge edge = Edge::kBottom;
  Rational offset;
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct Rect {
  Rational x0, x1, y0, y1;
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Interiors intersect.
bool open_overlap(const Rect& a, const Rect& b);

// Throws StructuralError when the offset is outside the anchored edge.
Rect anchor_rectangle(const LabelPoint& p, const Anchor& a);

struct AnchorLabelInstance {
  LabelInstance base;
  std::vector<std::vector<Anchor>> anchors;
};

struct AnchorLabeling {
  std::map<int, Anchor> placed;

  int size() const { return static_cast<int>(placed.size()); }
  friend bool operator==(const AnchorLabeling&, const AnchorLabeling&) = default;
};

// Checks that anchors lie on their edges and that labels have disjoint
// interiors. When `allowed` is given, every anchor must also be one of the
// point's listed anchors.
std::vector<std::string> validate_anchor_labeling(const LabelInstance& inst,
                                                  const AnchorLabeling& lab,
                                                  const AnchorLabelInstance* allowed = nullptr);

Rational weight_of(const LabelInstance& inst, const AnchorLabeling& lab);

// Slider positions as bottom anchors (offset p_x - z) and back. The reverse
// conversion throws std::invalid_argument if a non-bottom anchor is present.
AnchorLabeling to_anchor_labeling(const LabelInstance& inst, const Labeling& lab);
Labeling to_slider_labeling(const LabelInstance& inst, const AnchorLabeling& lab);

// Bottom anchors for every position of the point's window [p_x - l, p_x].
AnchorLabelInstance bottom_anchor_instance(const MultiPosInstance& inst);

// Swaps the roles of x and y, and of length and height.
LabelInstance transpose_instance(const LabelInstance& inst);

}  // namespace trimlab

#endif  // TRIMLAB_LABELING_HPP
