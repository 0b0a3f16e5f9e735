#include "trimlab/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace trimlab {

namespace {

constexpr double kScale = 40.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const LabelInstance& inst, const AnchorLabeling& lab) {
  if (auto report = validate_anchor_labeling(inst, lab); !report.empty()) {
    throw std::invalid_argument("refusing to render an infeasible labeling: " + report.front());
  }
  std::vector<Rect> rects;
  for (const auto& [id, a] : lab.placed) rects.push_back(anchor_rectangle(inst[id], a));

  Rational x0(0), x1(1), y0(0), y1(1);
  bool first = true;
  auto extend = [&](const Rational& lx, const Rational& hx, const Rational& ly,
                    const Rational& hy) {
    if (first) {
      x0 = lx, x1 = hx, y0 = ly, y1 = hy;
      first = false;
      return;
    }
    x0 = std::min(x0, lx), x1 = std::max(x1, hx);
    y0 = std::min(y0, ly), y1 = std::max(y1, hy);
  };
  for (const LabelPoint& p : inst.points) extend(p.x, p.x, p.y, p.y);
  for (const Rect& r : rects) extend(r.x0, r.x1, r.y0, r.y1);
  x0 -= Rational(1), y0 -= Rational(1), x1 += Rational(1), y1 += Rational(1);

  const double ox = x0.to_double();
  const double top = y1.to_double();
  auto sx = [&](const Rational& x) { return num((x.to_double() - ox) * kScale); };
  auto sy = [&](const Rational& y) { return num((top - y.to_double()) * kScale); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << num((x1 - x0).to_double() * kScale) << "\" height=\""
      << num((y1 - y0).to_double() * kScale) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::size_t i = 0;
  for (const auto& [id, a] : lab.placed) {
    const Rect& r = rects[i++];
    out << "<rect id=\"label" << id << "\" x=\"" << sx(r.x0) << "\" y=\"" << sy(r.y1)
        << "\" width=\"" << num((r.x1 - r.x0).to_double() * kScale) << "\" height=\""
        << num((r.y1 - r.y0).to_double() * kScale)
        << "\" fill=\"#cfe2f3\" fill-opacity=\"0.8\" stroke=\"#1c4587\" stroke-width=\"1\"/>\n";
  }
  for (const LabelPoint& p : inst.points) {
    const bool labeled = lab.placed.contains(p.id);
    out << "<circle id=\"point" << p.id << "\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
        << "\" r=\"4.0000\" fill=\"" << (labeled ? "black" : "none")
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace trimlab
