#include "geohull/chordal.hpp"

#include <algorithm>

#include "geohull/error.hpp"

namespace geohull {

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighborhood(v)); }

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v)) out.insert(v);
  }
  return out;
}

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n) {
    throw Error(ErrorCode::InvalidOrdering, "ordering has " + std::to_string(order.size()) +
                                                " entries for " + std::to_string(n) + " vertices");
  }
  VertexSet seen(n);
  for (Vertex v : order) {
    if (v >= n || seen.contains(v)) {
      throw Error(ErrorCode::InvalidOrdering,
                  "vertex " + std::to_string(v) + " is out of range or repeated");
    }
    seen.insert(v);
  }

  VertexSet remaining = VertexSet::full(n);
  for (Vertex v : order) {
    remaining.erase(v);
    VertexSet later = g.neighborhood(v);
    later &= remaining;
    if (!is_clique(g, later)) return false;
  }
  return true;
}

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    // n is small in this toolkit; a linear scan keeps the tie-break obvious.
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!have || weight[v] > weight[best]) {
        best = v;
        have = true;
      }
    }
    visited[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!visited[w]) ++weight[w];
    }
  }
  return order;
}

std::optional<EliminationOrdering> chordality(const Graph& g) {
  EliminationOrdering order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_ordering(g, order)) return std::nullopt;
  return order;
}

}  // namespace geohull
