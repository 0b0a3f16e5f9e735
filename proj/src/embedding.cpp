#include "trimlab/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "trimlab/errors.hpp"
#include "trimlab/geometry.hpp"

namespace trimlab {

namespace {

int position_in_rotation(const PlaneEmbedding& e, int v, int u) {
  const auto& rot = e.rotation[v];
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end()) return -1;
  return static_cast<int>(it - rot.begin());
}

void check_rotation(const WeightedGraph& g, const PlaneEmbedding& e) {
  const int n = g.vertex_count();
  if (static_cast<int>(e.rotation.size()) != n) {
    throw StructuralError("rotation system lists " + std::to_string(e.rotation.size()) +
                          " vertices, graph has " + std::to_string(n));
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = e.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw StructuralError("rotation at vertex " + std::to_string(v) +
                            " is not a permutation of its neighbours");
    }
  }
}

// Faces of a rotation system without any outer-face bookkeeping.
FaceStructure trace_raw(const WeightedGraph& g, const PlaneEmbedding& e) {
  const int n = g.vertex_count();
  FaceStructure fs;
  fs.face_of.resize(n);
  for (int v = 0; v < n; ++v) fs.face_of[v].assign(e.rotation[v].size(), -1);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(e.rotation[v].size()); ++i) {
      if (fs.face_of[v][i] >= 0) continue;
      const int id = static_cast<int>(fs.faces.size());
      std::vector<Dart> walk;
      int cu = v;
      int ci = i;
      while (fs.face_of[cu][ci] < 0) {
        fs.face_of[cu][ci] = id;
        const int cv = e.rotation[cu][ci];
        walk.push_back({cu, cv});
        const auto& rot = e.rotation[cv];
        const int back = position_in_rotation(e, cv, cu);
        const int deg = static_cast<int>(rot.size());
        cu = cv;
        ci = (back - 1 + deg) % deg;
      }
      if (cu != v || ci != i) {
        throw StructuralError("face traversal does not close");
      }
      fs.faces.push_back(std::move(walk));
    }
  }
  return fs;
}

}  // namespace

int FaceStructure::face_of_dart(const PlaneEmbedding& e, Dart d) const {
  if (d.from < 0 || d.from >= static_cast<int>(e.rotation.size())) return -1;
  const int i = position_in_rotation(e, d.from, d.to);
  return i < 0 ? -1 : face_of[d.from][i];
}

FaceStructure trace_faces(const WeightedGraph& g, const PlaneEmbedding& e) {
  check_rotation(g, e);
  FaceStructure fs = trace_raw(g, e);

  const auto comps = connected_components(g);
  std::vector<int> comp_of(g.vertex_count(), -1);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    for (int v : comps[c]) comp_of[v] = c;
  }
  std::vector<int> faces_in(comps.size(), 0);
  std::vector<int> edges_in(comps.size(), 0);
  for (const auto& f : fs.faces) ++faces_in[comp_of[f.front().from]];
  for (auto [u, v] : g.edges()) ++edges_in[comp_of[u]];

  std::vector<int> outer_count(comps.size(), 0);
  for (const Dart& d : e.outer) {
    if (fs.face_of_dart(e, d) < 0) {
      throw StructuralError("outer dart (" + std::to_string(d.from) + "," +
                            std::to_string(d.to) + ") is not an edge");
    }
    ++outer_count[comp_of[d.from]];
  }
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    if (edges_in[c] == 0) continue;
    const int euler = static_cast<int>(comps[c].size()) - edges_in[c] + faces_in[c];
    if (euler != 2) {
      throw StructuralError("rotation system of the component of vertex " +
                            std::to_string(comps[c].front()) + " has Euler characteristic " +
                            std::to_string(euler) + ", not 2");
    }
    if (outer_count[c] != 1) {
      throw StructuralError("component of vertex " + std::to_string(comps[c].front()) +
                            " needs exactly one outer dart");
    }
  }
  for (const auto& [v, d] : e.nested) {
    if (v < 0 || v >= g.vertex_count()) throw StructuralError("nested vertex out of range");
    if (fs.face_of_dart(e, d) < 0) throw StructuralError("nesting dart is not an edge");
    if (comp_of[d.from] == comp_of[v]) {
      throw StructuralError("component nested inside itself");
    }
  }
  return fs;
}

namespace {

// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half(const Point& d) {
  return (d.y.sign() > 0 || (d.y.sign() == 0 && d.x.sign() > 0)) ? 0 : 1;
}

bool angle_less(const Point& a, const Point& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

// Winding number of a closed walk around p (p not on the walk).
int winding_number(const std::vector<Point>& poly, const Point& p) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orientation(a, b, p) > 0) ++wn;
    } else {
      if (b.y <= p.y && orientation(a, b, p) < 0) --wn;
    }
  }
  return wn;
}

Rational doubled_area(const std::vector<Point>& poly) {
  Rational s;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    s += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return s;
}

}  // namespace

PlaneEmbedding embedding_from_coordinates(const WeightedGraph& g,
                                          std::span<const Rational> xs,
                                          std::span<const Rational> ys) {
  const int n = g.vertex_count();
  if (static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n) {
    throw StructuralError("coordinate count does not match the graph");
  }
  std::vector<Point> pt(n);
  for (int v = 0; v < n; ++v) pt[v] = {xs[v], ys[v]};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (pt[u].x == pt[v].x && pt[u].y == pt[v].y) {
        throw StructuralError("vertices " + std::to_string(u) + " and " +
                              std::to_string(v) + " coincide");
      }
    }
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    for (int v = 0; v < n; ++v) {
      if (v != a && v != b && on_segment(pt[a], pt[b], pt[v])) {
        throw StructuralError("vertex " + std::to_string(v) + " lies on edge {" +
                              std::to_string(a) + "," + std::to_string(b) + "}");
      }
    }
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_intersect(pt[a], pt[b], pt[c], pt[d])) {
        throw StructuralError("edges {" + std::to_string(a) + "," + std::to_string(b) +
                              "} and {" + std::to_string(c) + "," + std::to_string(d) +
                              "} cross");
      }
    }
  }

  PlaneEmbedding e;
  e.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    e.rotation[v].assign(nb.begin(), nb.end());
    auto dir = [&](int u) { return Point{pt[u].x - pt[v].x, pt[u].y - pt[v].y}; };
    std::sort(e.rotation[v].begin(), e.rotation[v].end(),
              [&](int a, int b) { return angle_less(dir(a), dir(b)); });
    for (std::size_t i = 0; i + 1 < e.rotation[v].size(); ++i) {
      if (!angle_less(dir(e.rotation[v][i]), dir(e.rotation[v][i + 1]))) {
        throw StructuralError("overlapping edges at vertex " + std::to_string(v));
      }
    }
  }

  const auto comps = connected_components(g);
  std::vector<int> leftmost(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int best = comps[c].front();
    for (int v : comps[c]) {
      if (pt[v].x < pt[best].x || (pt[v].x == pt[best].x && pt[v].y < pt[best].y)) best = v;
    }
    leftmost[c] = best;
    const auto& rot = e.rotation[best];
    if (rot.empty()) continue;
    // The wedge at the leftmost-lowest vertex that contains direction (-1, 0).
    const Point west{Rational(-1), Rational(0)};
    int w = rot.back();
    for (int u : rot) {
      if (angle_less({pt[u].x - pt[best].x, pt[u].y - pt[best].y}, west)) w = u;
    }
    e.outer.push_back({best, w});
  }

  const FaceStructure fs = trace_faces(g, e);
  std::vector<int> comp_of(n, -1);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    for (int v : comps[c]) comp_of[v] = c;
  }
  std::vector<int> outer_face(comps.size(), -1);
  for (const Dart& d : e.outer) outer_face[comp_of[d.from]] = fs.face_of_dart(e, d);

  std::vector<std::vector<Point>> polys(fs.faces.size());
  std::vector<Rational> areas(fs.faces.size());
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    for (const Dart& d : fs.faces[f]) polys[f].push_back(pt[d.from]);
    areas[f] = abs(doubled_area(polys[f]));
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Point& p = pt[leftmost[c]];
    int best = -1;
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
      const int owner = comp_of[fs.faces[f].front().from];
      if (owner == static_cast<int>(c) || static_cast<int>(f) == outer_face[owner]) continue;
      if (winding_number(polys[f], p) == 0) continue;
      if (best < 0 || areas[f] < areas[best]) best = static_cast<int>(f);
    }
    if (best >= 0) e.nested.push_back({leftmost[c], fs.faces[best].front()});
  }
  return e;
}

PlaneEmbedding find_planar_embedding(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n > kEmbeddingSearchLimit) {
    throw SizeGuardError("embedding search limited to " +
                         std::to_string(kEmbeddingSearchLimit) + " vertices, got " +
                         std::to_string(n));
  }
  constexpr long kMaxRotations = 5'000'000;
  PlaneEmbedding e;
  e.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    e.rotation[v].assign(nb.begin(), nb.end());
  }
  for (const VertexSet& comp : connected_components(g)) {
    std::vector<int> members;
    long total = 1;
    int edges = 0;
    for (int v : comp) {
      edges += g.degree(v);
      if (g.degree(v) >= 3) members.push_back(v);
      for (int k = 2; k < g.degree(v); ++k) {
        total *= k;
        if (total > kMaxRotations) {
          throw SizeGuardError("embedding search: too many rotation systems");
        }
      }
    }
    edges /= 2;
    if (edges == 0) continue;
    const int target_faces = 2 - static_cast<int>(comp.size()) + edges;

    auto count_faces = [&]() {
      std::vector<std::vector<char>> seen(n);
      for (int v : comp) seen[v].assign(e.rotation[v].size(), 0);
      int faces = 0;
      for (int v : comp) {
        for (int i = 0; i < static_cast<int>(e.rotation[v].size()); ++i) {
          if (seen[v][i]) continue;
          ++faces;
          int cu = v;
          int ci = i;
          while (!seen[cu][ci]) {
            seen[cu][ci] = 1;
            const int cv = e.rotation[cu][ci];
            const int back = position_in_rotation(e, cv, cu);
            const int deg = static_cast<int>(e.rotation[cv].size());
            cu = cv;
            ci = (back - 1 + deg) % deg;
          }
        }
      }
      return faces;
    };

    // Odometer over the orderings of rotation[v][1..] for every vertex of
    // degree >= 3; the first neighbour stays fixed.
    bool found = false;
    while (true) {
      if (count_faces() == target_faces) {
        found = true;
        break;
      }
      std::size_t i = 0;
      for (; i < members.size(); ++i) {
        auto& rot = e.rotation[members[i]];
        if (std::next_permutation(rot.begin() + 1, rot.end())) break;
      }
      if (i == members.size()) break;
    }
    if (!found) {
      throw StructuralError("component of vertex " + std::to_string(comp.front()) +
                            " is not planar");
    }
    const int low = comp.front();
    e.outer.push_back({low, e.rotation[low].front()});
  }
  trace_faces(g, e);
  return e;
}

}  // namespace trimlab
