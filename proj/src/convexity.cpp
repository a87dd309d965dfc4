#include "geohull/convexity.hpp"

#include "geohull/error.hpp"
#include "geohull/simd/kernels.hpp"

namespace geohull {

Geodesics::Geodesics(Graph g) : graph_(std::move(g)), distances_(distance_matrix(graph_)) {}

void Geodesics::add_interval(Vertex u, Vertex v, VertexSet& out) const {
  const std::uint16_t d = distances_(u, v);
  if (d <= 1) {
    out.insert(u);
    out.insert(v);
    return;
  }
  // w is on a shortest u-v path iff dist(u,w) + dist(w,v) == dist(u,v).
  const auto words = out.words();
  simd::active().geodesic_mask(distances_.row(u).data(), distances_.row(v).data(), d, words.data(),
                               words.size());
}

namespace {

// Grows `result` to its hull. All pairs within `processed` are known to add
// nothing outside `result`; `frontier` holds the members not yet paired.
VertexSet close_under_intervals(const Geodesics& geo, VertexSet result,
                                std::vector<Vertex> processed, std::vector<Vertex> frontier) {
  const std::size_t n = geo.order();
  while (!frontier.empty()) {
    VertexSet found(n);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (Vertex p : processed) geo.add_interval(frontier[i], p, found);
      for (std::size_t j = 0; j < i; ++j) geo.add_interval(frontier[i], frontier[j], found);
    }
    processed.insert(processed.end(), frontier.begin(), frontier.end());
    found -= result;
    result |= found;
    frontier = found.members();
  }
  return result;
}

}  // namespace

VertexSet interval(const Geodesics& geo, const VertexSet& s) {
  require_valid_set(geo.graph(), s);
  VertexSet out = s;
  const std::vector<Vertex> members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) geo.add_interval(members[i], members[j], out);
  }
  return out;
}

VertexSet hull(const Geodesics& geo, const VertexSet& s) {
  require_valid_set(geo.graph(), s);
  // Each round computes the interval of the current set; only pairs with a
  // vertex added in the previous round can contribute anything new.
  return close_under_intervals(geo, s, {}, s.members());
}

VertexSet extend_hull(const Geodesics& geo, const VertexSet& closed, Vertex v) {
  require_valid_set(geo.graph(), closed);
  if (closed.contains(v)) return closed;
  VertexSet start = closed;
  start.insert(v);
  return close_under_intervals(geo, std::move(start), closed.members(), {v});
}

bool is_convex(const Geodesics& geo, const VertexSet& s) { return interval(geo, s) == s; }

bool is_concave(const Geodesics& geo, const VertexSet& s) {
  require_valid_set(geo.graph(), s);
  const std::vector<Vertex> outside = s.complement().members();
  VertexSet reach(geo.order());
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      geo.add_interval(outside[i], outside[j], reach);
    }
    if (reach.intersects(s)) return false;
  }
  return true;
}

bool is_hull_set(const Geodesics& geo, const VertexSet& s) {
  return hull(geo, s).size() == geo.order();
}

std::vector<IntervalDependency> interval_dependencies(const Geodesics& geo) {
  std::vector<IntervalDependency> deps;
  const auto n = static_cast<Vertex>(geo.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (geo.distances()(u, v) <= 1) continue;
      VertexSet inner(n);
      geo.add_interval(u, v, inner);
      inner.erase(u);
      inner.erase(v);
      inner.for_each([&](Vertex w) { deps.push_back({u, v, w}); });
    }
  }
  return deps;
}

VertexSet interval(const Graph& g, const VertexSet& s) { return interval(Geodesics(g), s); }
VertexSet hull(const Graph& g, const VertexSet& s) { return hull(Geodesics(g), s); }
bool is_convex(const Graph& g, const VertexSet& s) { return is_convex(Geodesics(g), s); }
bool is_concave(const Graph& g, const VertexSet& s) { return is_concave(Geodesics(g), s); }
bool is_hull_set(const Graph& g, const VertexSet& s) { return is_hull_set(Geodesics(g), s); }
std::vector<IntervalDependency> interval_dependencies(const Graph& g) {
  return interval_dependencies(Geodesics(g));
}

}  // namespace geohull
