#include "geohull/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "geohull/error.hpp"

namespace geohull {

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

[[noreturn]] void parse_failure(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

// Reads exactly `count` unsigned integers from the line; anything else fails.
template <std::size_t count>
std::array<std::uint64_t, count> read_fields(std::string_view line, std::size_t line_no) {
  std::array<std::uint64_t, count> fields{};
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  };
  for (std::size_t i = 0; i < count; ++i) {
    skip_space();
    auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), fields[i]);
    if (ec != std::errc{}) {
      parse_failure(line_no, "expected " + std::to_string(count) + " non-negative integers, got '" +
                                 std::string(line) + "'");
    }
    pos = static_cast<std::size_t>(end - line.data());
  }
  skip_space();
  if (pos != line.size()) parse_failure(line_no, "trailing text in '" + std::string(line) + "'");
  return fields;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (is_blank(line) || line.front() == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line()) parse_failure(line_no, "missing '<vertex_count> <edge_count>' header");
  const auto header = read_fields<2>(line, line_no);
  if (header[0] > max_graph_order()) {
    parse_failure(line_no, "vertex count " + std::to_string(header[0]) + " too large");
  }
  std::vector<Edge> edges;
  edges.reserve(header[1]);
  for (std::uint64_t i = 0; i < header[1]; ++i) {
    if (!next_content_line()) {
      parse_failure(line_no, "expected " + std::to_string(header[1]) + " edges, found " +
                                 std::to_string(i));
    }
    const auto e = read_fields<2>(line, line_no);
    if (e[0] >= header[0] || e[1] >= header[0]) {
      throw Error(ErrorCode::InvalidEdge, "line " + std::to_string(line_no) +
                                              ": endpoint out of range in '" + line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  if (next_content_line()) parse_failure(line_no, "unexpected content after the edge list");
  return build_graph(header[0], edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  write_graph(out, g);
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

VertexSet parse_vertex_set(std::string_view text, std::size_t universe) {
  VertexSet s(universe);
  if (is_blank(text)) return s;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, comma - start);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "empty entry in vertex set '" + std::string(text) + "'");
    }
    token = token.substr(first, last - first + 1);
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad vertex index '" + std::string(token) + "'");
    }
    if (value >= universe) {
      throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(value) +
                                                " out of range for order " + std::to_string(universe));
    }
    s.insert(static_cast<Vertex>(value));
    start = comma + 1;
  }
  return s;
}

std::string format_vertex_set(const VertexSet& s) {
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

}  // namespace geohull
