#pragma once

#include <compare>
#include <vector>

#include "geohull/graph.hpp"

namespace geohull {

// A connected graph together with its distance matrix; the input to every
// geodesic-convexity operation. Construction throws Error(Disconnected).
class Geodesics {
 public:
  explicit Geodesics(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  const DistanceMatrix& distances() const noexcept { return distances_; }
  std::size_t order() const noexcept { return graph_.order(); }

  // Adds I({u,v}) to out.
  void add_interval(Vertex u, Vertex v, VertexSet& out) const;

 private:
  Graph graph_;
  DistanceMatrix distances_;
};

// All vertices on shortest paths between two members of s.
VertexSet interval(const Geodesics& geo, const VertexSet& s);
// Smallest convex superset of s.
VertexSet hull(const Geodesics& geo, const VertexSet& s);
// hull(closed ∪ {v}) for a convex set `closed`. Only pairs involving new
// vertices are examined, so the caller must pass a convex set.
VertexSet extend_hull(const Geodesics& geo, const VertexSet& closed, Vertex v);

bool is_convex(const Geodesics& geo, const VertexSet& s);
// Checks that no interval of two outside vertices meets s.
bool is_concave(const Geodesics& geo, const VertexSet& s);
bool is_hull_set(const Geodesics& geo, const VertexSet& s);

// {u,v} -> w : w lies strictly inside some shortest u-v path.
struct IntervalDependency {
  Vertex u;  // u < v
  Vertex v;
  Vertex w;

  friend auto operator<=>(const IntervalDependency&, const IntervalDependency&) = default;
};

// Every dependency, sorted by (u, v, w).
std::vector<IntervalDependency> interval_dependencies(const Geodesics& geo);

// Graph forms build a Geodesics first.
VertexSet interval(const Graph& g, const VertexSet& s);
VertexSet hull(const Graph& g, const VertexSet& s);
bool is_convex(const Graph& g, const VertexSet& s);
bool is_concave(const Graph& g, const VertexSet& s);
bool is_hull_set(const Graph& g, const VertexSet& s);
std::vector<IntervalDependency> interval_dependencies(const Graph& g);

}  // namespace geohull
