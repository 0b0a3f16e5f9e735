#include "trimlab/labeling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "trimlab/errors.hpp"

namespace trimlab {

namespace {

std::string pname(int id) { return "p" + std::to_string(id); }

void check_id(const LabelInstance& inst, int id) {
  if (id < 0 || id >= inst.size()) {
    throw StructuralError("unknown point id " + std::to_string(id));
  }
}

}  // namespace

LabelInstance make_instance(std::vector<LabelPoint> points) {
  LabelInstance inst;
  std::set<std::pair<Rational, Rational>> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    LabelPoint& p = points[i];
    p.id = static_cast<int>(i);
    if (p.length.sign() <= 0) throw StructuralError(pname(p.id) + ": length must be positive");
    if (p.height.sign() <= 0) throw StructuralError(pname(p.id) + ": height must be positive");
    if (p.weight.sign() < 0) throw StructuralError(pname(p.id) + ": negative weight");
    if (!seen.emplace(p.x, p.y).second) {
      throw StructuralError(pname(p.id) + ": coincides with an earlier point");
    }
  }
  inst.points = std::move(points);
  return inst;
}

bool y_overlap(const LabelPoint& p, const LabelPoint& q) {
  return p.y < q.y + q.height && q.y < p.y + p.height;
}

std::vector<std::string> validate_labeling(const LabelInstance& inst, const Labeling& lab) {
  std::vector<std::string> report;
  for (const auto& [id, z] : lab.z) {
    check_id(inst, id);
    const LabelPoint& p = inst[id];
    if (z > p.x) report.push_back(pname(id) + ": z(p) > p_x (" + z.str() + " > " + p.x.str() + ")");
    if (z < p.x - p.length) {
      report.push_back(pname(id) + ": z(p) < p_x - l(p) (" + z.str() + " < " +
                       (p.x - p.length).str() + ")");
    }
  }
  for (auto it = lab.z.begin(); it != lab.z.end(); ++it) {
    const LabelPoint& p = inst[it->first];
    for (auto jt = std::next(it); jt != lab.z.end(); ++jt) {
      const LabelPoint& q = inst[jt->first];
      if (!y_overlap(p, q)) continue;
      const Rational& zp = it->second;
      const Rational& zq = jt->second;
      if (zp + p.length <= zq || zq + q.length <= zp) continue;
      report.push_back("labels of " + pname(p.id) + " and " + pname(q.id) + " overlap");
    }
  }
  return report;
}

Rational weight_of(const LabelInstance& inst, const Labeling& lab) {
  Rational w;
  for (const auto& [id, z] : lab.z) {
    check_id(inst, id);
    w += inst[id].weight;
  }
  return w;
}

MultiPosInstance shared_positions(const LabelInstance& inst, std::vector<Rational> m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  MultiPosInstance out;
  out.base = inst;
  out.positions.assign(inst.size(), m);
  return out;
}

std::vector<std::string> validate_multipos(const MultiPosInstance& inst, const Labeling& lab) {
  std::vector<std::string> report = validate_labeling(inst.base, lab);
  for (const auto& [id, z] : lab.z) {
    const auto& set = inst.positions.at(id);
    if (!std::binary_search(set.begin(), set.end(), z)) {
      report.push_back(pname(id) + ": position " + z.str() + " not in M(p)");
    }
  }
  return report;
}

std::string_view edge_name(Edge e) {
  switch (e) {
    case Edge::kBottom: return "bottom";
    case Edge::kTop: return "top";
    case Edge::kLeft: return "left";
    case Edge::kRight: return "right";
  }
  return "?";
}

Edge parse_edge(std::string_view name) {
  if (name == "bottom") return Edge::kBottom;
  if (name == "top") return Edge::kTop;
  if (name == "left") return Edge::kLeft;
  if (name == "right") return Edge::kRight;
  throw std::invalid_argument("unknown edge '" + std::string(name) + "'");
}

bool open_overlap(const Rect& a, const Rect& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

Rect anchor_rectangle(const LabelPoint& p, const Anchor& a) {
  const bool horizontal = a.edge == Edge::kBottom || a.edge == Edge::kTop;
  const Rational& span = horizontal ? p.length : p.height;
  if (a.offset.sign() < 0 || a.offset > span) {
    throw StructuralError(pname(p.id) + ": anchor offset " + a.offset.str() + " not on the " +
                          std::string(edge_name(a.edge)) + " edge");
  }
  switch (a.edge) {
    case Edge::kBottom:
      return {p.x - a.offset, p.x - a.offset + p.length, p.y, p.y + p.height};
    case Edge::kTop:
      return {p.x - a.offset, p.x - a.offset + p.length, p.y - p.height, p.y};
    case Edge::kLeft:
      return {p.x, p.x + p.length, p.y - a.offset, p.y - a.offset + p.height};
    case Edge::kRight:
      return {p.x - p.length, p.x, p.y - a.offset, p.y - a.offset + p.height};
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> validate_anchor_labeling(const LabelInstance& inst,
                                                  const AnchorLabeling& lab,
                                                  const AnchorLabelInstance* allowed) {
  std::vector<std::string> report;
  std::vector<std::pair<int, Rect>> rects;
  for (const auto& [id, a] : lab.placed) {
    check_id(inst, id);
    try {
      rects.emplace_back(id, anchor_rectangle(inst[id], a));
    } catch (const StructuralError& e) {
      report.push_back(e.what());
      continue;
    }
    if (allowed != nullptr) {
      const auto& set = allowed->anchors.at(id);
      if (std::find(set.begin(), set.end(), a) == set.end()) {
        report.push_back(pname(id) + ": anchor " + std::string(edge_name(a.edge)) + " " +
                         a.offset.str() + " not in the anchor set");
      }
    }
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      if (open_overlap(rects[i].second, rects[j].second)) {
        report.push_back("labels of " + pname(rects[i].first) + " and " +
                         pname(rects[j].first) + " overlap");
      }
    }
  }
  return report;
}

Rational weight_of(const LabelInstance& inst, const AnchorLabeling& lab) {
  Rational w;
  for (const auto& [id, a] : lab.placed) {
    check_id(inst, id);
    w += inst[id].weight;
  }
  return w;
}

AnchorLabeling to_anchor_labeling(const LabelInstance& inst, const Labeling& lab) {
  AnchorLabeling out;
  for (const auto& [id, z] : lab.z) {
    check_id(inst, id);
    out.placed.emplace(id, Anchor{Edge::kBottom, inst[id].x - z});
  }
  return out;
}

Labeling to_slider_labeling(const LabelInstance& inst, const AnchorLabeling& lab) {
  Labeling out;
  for (const auto& [id, a] : lab.placed) {
    check_id(inst, id);
    if (a.edge != Edge::kBottom) {
      throw std::invalid_argument(pname(id) + " is not anchored on its bottom edge");
    }
    out.z.emplace(id, inst[id].x - a.offset);
  }
  return out;
}

AnchorLabelInstance bottom_anchor_instance(const MultiPosInstance& inst) {
  AnchorLabelInstance out;
  out.base = inst.base;
  out.anchors.resize(inst.base.size());
  for (const LabelPoint& p : inst.base.points) {
    for (const Rational& z : inst.positions.at(p.id)) {
      if (z >= p.x - p.length && z <= p.x) out.anchors[p.id].push_back({Edge::kBottom, p.x - z});
    }
  }
  return out;
}

LabelInstance transpose_instance(const LabelInstance& inst) {
  LabelInstance out = inst;
  for (LabelPoint& p : out.points) {
    std::swap(p.x, p.y);
    std::swap(p.length, p.height);
  }
  return out;
}

}  // namespace trimlab
