#ifndef MATCHTOP_GRAPH_IO_HPP
#define MATCHTOP_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "matchtop/graph.hpp"

namespace matchtop {

enum class GraphFormat { Auto, EdgeList, Graph6 };

// Edge list: one edge per line as two whitespace-separated tokens, `#` starts
// a comment, blank lines ignored. Labels may be arbitrary tokens; they are
// compacted to dense ids in order of first appearance and kept as labels.
Graph parse_edge_list(std::string_view text);

// Standard graph6 (printable 6-bit encoding of the upper triangle).
Graph parse_graph6(std::string_view text);

// Parses `text`, autodetecting the format when `format` is Auto.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

GraphFormat detect_format(std::string_view text);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

// DOT renderings of g and of the 1-skeleton of its matching complex.
std::string to_dot(const Graph& g);
std::string matching_skeleton_dot(const Graph& g);

std::string format_name(GraphFormat f);

}  // namespace matchtop

#endif  // MATCHTOP_GRAPH_IO_HPP
