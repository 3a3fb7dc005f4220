#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "indpoly/graph.hpp"

namespace indpoly {

/// Decodes one graph6 line (trailing newline / CR tolerated, optional
/// ">>graph6<<" header stripped). Throws ParseError naming the byte offset.
Graph parse_graph6(std::string_view line);

/// Encodes with zero padding; canonical inputs round-trip byte for byte.
std::string to_graph6(const Graph& g);

/// Plain edge list: first line "n", then one "u v" pair per line.
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

}  // namespace indpoly
