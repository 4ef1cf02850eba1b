#pragma once

#include "toughness/core/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace tough {

/// Largest vertex count expressible by the one-byte graph6 size header.
inline constexpr std::size_t kGraph6ShortMax = 62;

/// Decodes one graph6 line (short size header only). A single trailing "\n" or
/// "\r\n" and an optional ">>graph6<<" prefix are accepted. Every other
/// deviation, including non-zero padding bits, raises ParseError with the
/// offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes g as a graph6 line without terminator. Throws UnsupportedSizeError when n > 62.
std::string to_graph6(const Graph& g);

/// Reads every non-empty line of a graph6 stream. Errors carry the line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// "n m" header followed by m lines "u v".
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list; edges in lexicographic order, newline-terminated.
std::string to_edge_list(const Graph& g);

}  // namespace tough
