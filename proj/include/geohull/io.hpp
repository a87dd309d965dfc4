#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "geohull/graph.hpp"

namespace geohull {

// Graph text format:
//   # optional comment lines
//   <vertex_count> <edge_count>
//   <u> <v>            (edge_count lines, 0-based)
// Parse failures throw Error(ParseError) naming the line; invalid edges keep
// their InvalidEdge code.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);  // Error(IoError) when unreadable
// Writes the normalized edge list; no comments, '\n' line endings.
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);
std::string graph_to_string(const Graph& g);

// "3,0,7" -> {0,3,7}. Whitespace around indices is ignored; an empty string
// is the empty set. Throws Error(ParseError) on malformed text and
// Error(InvalidVertex) on out-of-range indices.
VertexSet parse_vertex_set(std::string_view text, std::size_t universe);
// Ascending, comma-separated.
std::string format_vertex_set(const VertexSet& s);

}  // namespace geohull
