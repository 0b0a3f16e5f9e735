#include "trimlab/labeling_io.hpp"

#include <sstream>
#include <vector>

#include "trimlab/errors.hpp"
#include "trimlab/graph_io.hpp"

namespace trimlab {

namespace {

using detail::parse_index;
using detail::parse_number;
using detail::tokenize_line;

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = tokenize_line(text.substr(start, end - start));
    if (!tokens.empty()) fn(tokens, line_no);
    if (end == text.size()) break;
    start = end + 1;
  }
}

void expect_arity(const std::vector<std::string_view>& t, std::size_t n, int line) {
  if (t.size() != n) {
    throw ParseError(line, "'" + std::string(t[0]) + "' expects " + std::to_string(n - 1) +
                               " arguments");
  }
}

struct RawLine {
  int line;
  int id;
  bool anchored;
  Edge edge;
  Rational value;
};

std::vector<RawLine> parse_raw_labeling(std::string_view text, bool allow_place) {
  std::vector<RawLine> out;
  std::vector<int> seen_line;
  for_each_line(text, [&](const std::vector<std::string_view>& t, int line) {
    RawLine r{line, 0, false, Edge::kBottom, Rational()};
    if (t[0] == "lab") {
      expect_arity(t, 3, line);
      r.id = parse_index(t[1], line);
      r.value = parse_number(t[2], line);
    } else if (t[0] == "place" && allow_place) {
      expect_arity(t, 4, line);
      r.id = parse_index(t[1], line);
      r.anchored = true;
      try {
        r.edge = parse_edge(t[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
      r.value = parse_number(t[3], line);
    } else {
      throw ParseError(line, "unknown directive '" + std::string(t[0]) + "'");
    }
    if (static_cast<std::size_t>(r.id) >= seen_line.size()) seen_line.resize(r.id + 1, 0);
    if (seen_line[r.id] != 0) {
      throw ParseError(line, "point " + std::to_string(r.id) + " already labeled on line " +
                                 std::to_string(seen_line[r.id]));
    }
    seen_line[r.id] = line;
    out.push_back(r);
  });
  return out;
}

}  // namespace

LabelInstance parse_instance(std::string_view text) {
  int n = -1;
  std::vector<LabelPoint> points;
  int header_line = 0;
  for_each_line(text, [&](const std::vector<std::string_view>& t, int line) {
    if (t[0] == "instance") {
      expect_arity(t, 2, line);
      if (n >= 0) throw ParseError(line, "duplicate 'instance' header");
      n = parse_index(t[1], line);
      header_line = line;
      return;
    }
    if (n < 0) throw ParseError(line, "expected 'instance <n>' header first");
    if (t[0] != "pt") throw ParseError(line, "unknown directive '" + std::string(t[0]) + "'");
    expect_arity(t, 5, line);
    if (static_cast<int>(points.size()) >= n) {
      throw ParseError(line, "more points than the header's " + std::to_string(n));
    }
    LabelPoint p;
    p.x = parse_number(t[1], line);
    p.y = parse_number(t[2], line);
    p.length = parse_number(t[3], line);
    p.weight = parse_number(t[4], line);
    p.id = static_cast<int>(points.size());
    if (p.length.sign() <= 0) throw ParseError(line, "length must be positive");
    if (p.weight.sign() < 0) throw ParseError(line, "negative weight");
    for (const LabelPoint& q : points) {
      if (q.x == p.x && q.y == p.y) {
        throw ParseError(line, "point coincides with point " + std::to_string(q.id));
      }
    }
    points.push_back(p);
  });
  if (n < 0) throw ParseError(1, "missing 'instance <n>' header");
  if (static_cast<int>(points.size()) != n) {
    throw ParseError(header_line, "header announces " + std::to_string(n) + " points, found " +
                                      std::to_string(points.size()));
  }
  return make_instance(std::move(points));
}

std::string format_instance(const LabelInstance& inst) {
  std::ostringstream out;
  out << "instance " << inst.size() << "\n";
  for (const LabelPoint& p : inst.points) {
    out << "pt " << p.x.str() << " " << p.y.str() << " " << p.length.str() << " "
        << p.weight.str() << "\n";
  }
  return out.str();
}

Labeling parse_labeling(std::string_view text) {
  Labeling lab;
  for (const RawLine& r : parse_raw_labeling(text, false)) lab.z.emplace(r.id, r.value);
  return lab;
}

std::string format_labeling(const Labeling& lab) {
  std::ostringstream out;
  for (const auto& [id, z] : lab.z) out << "lab " << id << " " << z.str() << "\n";
  return out.str();
}

AnchorLabeling parse_anchor_labeling(std::string_view text, const LabelInstance& inst) {
  AnchorLabeling lab;
  for (const RawLine& r : parse_raw_labeling(text, true)) {
    if (r.id >= inst.size()) {
      throw ParseError(r.line, "point " + std::to_string(r.id) + " not in the instance");
    }
    if (r.anchored) {
      lab.placed.emplace(r.id, Anchor{r.edge, r.value});
    } else {
      lab.placed.emplace(r.id, Anchor{Edge::kBottom, inst[r.id].x - r.value});
    }
  }
  return lab;
}

std::string format_anchor_labeling(const AnchorLabeling& lab, const LabelInstance& inst) {
  std::ostringstream out;
  for (const auto& [id, a] : lab.placed) {
    if (a.edge == Edge::kBottom) {
      out << "lab " << id << " " << (inst[id].x - a.offset).str() << "\n";
    } else {
      out << "place " << id << " " << edge_name(a.edge) << " " << a.offset.str() << "\n";
    }
  }
  return out.str();
}

}  // namespace trimlab
