#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geohull/graph.hpp"

namespace geohull {

// Permutation of all vertices of a graph.
using EliminationOrdering = std::vector<Vertex>;

bool is_simplicial(const Graph& g, Vertex v);
// Vertices whose open neighborhood is a clique.
VertexSet simplicial_vertices(const Graph& g);

// True iff every vertex is simplicial in the subgraph induced by itself and
// the vertices after it. Throws Error(InvalidOrdering) unless `order` is a
// permutation of the vertices of g.
bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order);

// Maximum-cardinality search visiting order, ties broken by smallest index.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);

// A perfect elimination ordering (the reversed search order) when g is
// chordal; nullopt otherwise.
std::optional<EliminationOrdering> chordality(const Graph& g);

}  // namespace geohull
