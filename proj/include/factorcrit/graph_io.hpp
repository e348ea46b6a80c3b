#pragma once

#include <string>
#include <string_view>

#include "factorcrit/graph.hpp"

namespace factorcrit {

/// Decodes one graph6 record. An optional ">>graph6<<" header and a single
/// trailing newline are accepted. Throws ParseError (with byte offset) on a
/// malformed size prefix, a truncated or overlong payload, bytes outside
/// 63..126, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes without header or newline. n <= 62 uses one size byte, n <= 258047
/// the 4-byte form, larger orders the 8-byte form.
std::string serialize_graph6(const Graph& g);

/// Plain-text edge list: one "u v" pair per line, 0-indexed. A line holding a
/// single integer sets the vertex count (otherwise max index + 1). Blank lines
/// and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// Edge list if the first significant character is a digit or '#', graph6
/// otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace factorcrit
