#ifndef TRIMLAB_GRAPH_IO_HPP
#define TRIMLAB_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "trimlab/graph.hpp"

namespace trimlab {

// Graph text format:
//   graph <n>
//   w <i> <weight>      (decimal or p/q; vertices without a line weigh 1)
//   e <i> <j>
// Blank lines and '#' comments are ignored. Errors throw ParseError.
WeightedGraph parse_graph(std::string_view text);
std::string format_graph(const WeightedGraph& g);

// Decomposition text format:
//   td <m>
//   bag <node> <v...>
//   te <a> <b>
//   root <node>
TreeDecomposition parse_decomposition(std::string_view text);
std::string format_decomposition(const TreeDecomposition& d);

namespace detail {
// Whitespace-separated tokens of one line with any '#' comment removed.
std::vector<std::string_view> tokenize_line(std::string_view line);
int parse_index(std::string_view token, int line);
Rational parse_number(std::string_view token, int line);
}  // namespace detail

}  // namespace trimlab

#endif  // TRIMLAB_GRAPH_IO_HPP
