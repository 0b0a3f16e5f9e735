#ifndef TRIMLAB_GEOMETRY_HPP
#define TRIMLAB_GEOMETRY_HPP

#include "trimlab/rational.hpp"

namespace trimlab {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  return cross({b.x - a.x, b.y - a.y}, {c.x - a.x, c.y - a.y}).sign();
}

// p on the closed segment ab.
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x &&
         p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segments ab and cd share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

}  // namespace trimlab

#endif  // TRIMLAB_GEOMETRY_HPP
