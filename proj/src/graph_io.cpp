#include "trimlab/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "trimlab/errors.hpp"

namespace trimlab {

namespace detail {

std::vector<std::string_view> tokenize_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_index(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, "expected a nonnegative integer, got '" +
                               std::string(token) + "'");
  }
  return value;
}

Rational parse_number(std::string_view token, int line) {
  try {
    return Rational::parse(token);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "expected a number, got '" + std::string(token) + "'");
  }
}

}  // namespace detail

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

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n, int line) {
  if (tokens.size() != n) {
    throw ParseError(line, "'" + std::string(tokens[0]) + "' expects " +
                               std::to_string(n - 1) + " arguments");
  }
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  int n = -1;
  std::vector<Rational> weights;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_lines;
  for_each_line(text, [&](const std::vector<std::string_view>& t, int line) {
    if (t[0] == "graph") {
      expect_arity(t, 2, line);
      if (n >= 0) throw ParseError(line, "duplicate 'graph' header");
      n = parse_index(t[1], line);
      weights.assign(n, Rational(1));
      return;
    }
    if (n < 0) throw ParseError(line, "expected 'graph <n>' header first");
    if (t[0] == "w") {
      expect_arity(t, 3, line);
      int v = parse_index(t[1], line);
      if (v >= n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
      Rational w = parse_number(t[2], line);
      if (w.sign() < 0) throw ParseError(line, "negative weight");
      weights[v] = w;
    } else if (t[0] == "e") {
      expect_arity(t, 3, line);
      int u = parse_index(t[1], line);
      int v = parse_index(t[2], line);
      if (u >= n || v >= n) throw ParseError(line, "edge endpoint out of range");
      if (u == v) throw ParseError(line, "self-loop");
      edges.emplace_back(u, v);
      edge_lines.push_back(line);
    } else {
      throw ParseError(line, "unknown directive '" + std::string(t[0]) + "'");
    }
  });
  if (n < 0) throw ParseError(1, "missing 'graph <n>' header");
  std::vector<std::pair<int, int>> normalized = edges;
  for (auto& [u, v] : normalized) {
    if (u > v) std::swap(u, v);
  }
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (normalized[i] == normalized[j]) throw ParseError(edge_lines[i], "duplicate edge");
    }
  }
  return WeightedGraph(std::move(weights), std::move(edges));
}

std::string format_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "w " << v << " " << g.weight(v).str() << "\n";
  }
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

TreeDecomposition parse_decomposition(std::string_view text) {
  int m = -1;
  TreeDecomposition d;
  bool have_root = false;
  std::vector<char> bag_seen;
  for_each_line(text, [&](const std::vector<std::string_view>& t, int line) {
    if (t[0] == "td") {
      expect_arity(t, 2, line);
      if (m >= 0) throw ParseError(line, "duplicate 'td' header");
      m = parse_index(t[1], line);
      d.bags.assign(m, {});
      bag_seen.assign(m, 0);
      return;
    }
    if (m < 0) throw ParseError(line, "expected 'td <m>' header first");
    if (t[0] == "bag") {
      if (t.size() < 2) throw ParseError(line, "'bag' expects a node index");
      int x = parse_index(t[1], line);
      if (x >= m) throw ParseError(line, "node " + std::to_string(x) + " out of range");
      if (bag_seen[x]) throw ParseError(line, "duplicate bag for node " + std::to_string(x));
      bag_seen[x] = 1;
      std::vector<int> vs;
      for (std::size_t i = 2; i < t.size(); ++i) vs.push_back(parse_index(t[i], line));
      d.bags[x] = make_vertex_set(std::move(vs));
    } else if (t[0] == "te") {
      expect_arity(t, 3, line);
      int a = parse_index(t[1], line);
      int b = parse_index(t[2], line);
      if (a >= m || b >= m) throw ParseError(line, "tree edge endpoint out of range");
      d.tree_edges.emplace_back(a, b);
    } else if (t[0] == "root") {
      expect_arity(t, 2, line);
      int r = parse_index(t[1], line);
      if (r >= m) throw ParseError(line, "root out of range");
      if (have_root) throw ParseError(line, "duplicate 'root'");
      have_root = true;
      d.root = r;
    } else {
      throw ParseError(line, "unknown directive '" + std::string(t[0]) + "'");
    }
  });
  if (m < 0) throw ParseError(1, "missing 'td <m>' header");
  return d;
}

std::string format_decomposition(const TreeDecomposition& d) {
  std::ostringstream out;
  out << "td " << d.node_count() << "\n";
  for (int x = 0; x < d.node_count(); ++x) {
    out << "bag " << x;
    for (int v : d.bags[x]) out << " " << v;
    out << "\n";
  }
  for (auto [a, b] : d.tree_edges) out << "te " << a << " " << b << "\n";
  if (d.node_count() > 0) out << "root " << d.root << "\n";
  return out.str();
}

}  // namespace trimlab
