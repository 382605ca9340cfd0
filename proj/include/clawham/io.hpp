#pragma once

// graph6 and plain edge-list formats.
//
// Edge list: a header line "n m" followed by m lines "u v" with 0-based
// vertices. Blank lines and lines starting with '#' are skipped. For
// multigraphs a repeated line is a parallel edge; for simple graphs it is an
// error.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

/// One graph6 line, without the trailing newline. A leading ">>graph6<<"
/// header is accepted and ignored.
SimpleGraph parse_graph6(std::string_view line);
std::string to_graph6(const SimpleGraph& g);

SimpleGraph parse_edge_list(std::string_view text);
Multigraph parse_multigraph_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);
std::string to_edge_list(const Multigraph& h);

/// Newline-delimited graph6 corpus; at most `limit` graphs when limit > 0.
/// Errors name the offending line.
std::vector<SimpleGraph> read_graph6_corpus(std::istream& in, std::size_t limit = 0);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

GraphFormat parse_format(std::string_view name);

/// Reads one graph. Auto picks edge list when the first content line holds
/// two integers, else graph6.
SimpleGraph parse_graph(std::string_view text, GraphFormat format);
std::string format_graph(const SimpleGraph& g, GraphFormat format);

}  // namespace clawham
