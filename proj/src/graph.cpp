#include "geohull/graph.hpp"

#include <algorithm>
#include <bit>

#include "geohull/error.hpp"
#include "geohull/simd/kernels.hpp"

namespace geohull {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidEdge:
      return "InvalidEdge";
    case ErrorCode::InvalidVertex:
      return "InvalidVertex";
    case ErrorCode::Disconnected:
      return "Disconnected";
    case ErrorCode::EmptyGraph:
      return "EmptyGraph";
    case ErrorCode::InvalidOrdering:
      return "InvalidOrdering";
    case ErrorCode::InvalidInstance:
      return "InvalidInstance";
    case ErrorCode::NotAWitness:
      return "NotAWitness";
    case ErrorCode::TooLarge:
      return "TooLarge";
    case ErrorCode::BudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::IoError:
      return "IoError";
    case ErrorCode::ParseError:
      return "ParseError";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// VertexSet

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::full(std::size_t universe) { return VertexSet(universe).complement(); }

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(universe_));
  }
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::InvalidVertex, "vertex sets over different graphs (" +
                                              std::to_string(universe_) + " vs " +
                                              std::to_string(other.universe_) + " vertices)");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & other.words_[k]) != 0) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
  if (const std::size_t tail = universe_ % 64; tail != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

// ---------------------------------------------------------------------------
// Graph

std::size_t max_graph_order() noexcept { return std::size_t{simd::kMaxDistance} + 1; }

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edge_list) {
  if (vertex_count > max_graph_order()) {
    throw Error(ErrorCode::TooLarge, "graph order " + std::to_string(vertex_count) +
                                         " exceeds " + std::to_string(max_graph_order()));
  }
  Graph g;
  g.edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                              ") has an endpoint outside [0," +
                                              std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(vertex_count, {});
  g.neighborhoods_.assign(vertex_count, VertexSet(vertex_count));
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.neighborhoods_[u].insert(v);
    g.neighborhoods_[v].insert(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

Graph build_graph(std::size_t vertex_count, std::initializer_list<Edge> edge_list) {
  return build_graph(vertex_count, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

std::string Graph::label(Vertex v) const {
  if (v < names_.size()) return names_[v];
  return std::to_string(v);
}

Graph Graph::with_names(std::vector<std::string> names) const {
  if (names.size() != order()) {
    throw Error(ErrorCode::InvalidVertex, "expected " + std::to_string(order()) + " names, got " +
                                              std::to_string(names.size()));
  }
  Graph copy = *this;
  copy.names_ = std::move(names);
  return copy;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  const Edge target{std::min(u, v), std::max(u, v)};
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  bool found = false;
  for (const Edge& e : edges_) {
    if (e == target) {
      found = true;
    } else {
      kept.push_back(e);
    }
  }
  if (!found) {
    throw Error(ErrorCode::InvalidEdge,
                "no edge (" + std::to_string(u) + "," + std::to_string(v) + ") to remove");
  }
  Graph out = build_graph(order(), kept);
  out.names_ = names_;
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

// ---------------------------------------------------------------------------
// Distances

DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix d;
  d.order_ = n;
  d.stride_ = word_count(n) * simd::kLaneBlock;
  d.data_.assign(n * d.stride_, simd::kDistancePad);

  std::vector<Vertex> queue(n);
  for (Vertex source = 0; source < n; ++source) {
    std::uint16_t* row = d.data_.data() + static_cast<std::size_t>(source) * d.stride_;
    row[source] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == simd::kDistancePad) {
          row[w] = static_cast<std::uint16_t>(row[u] + 1);
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(source) + " reaches only " +
                                               std::to_string(tail) + " of " + std::to_string(n) +
                                               " vertices");
    }
  }
  return d;
}

std::size_t eccentricity(const DistanceMatrix& d, Vertex v) {
  if (v >= d.order()) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  }
  return simd::active().row_max(d.row(v).data(), d.order());
}

std::size_t diameter(const DistanceMatrix& d) {
  std::size_t best = 0;
  for (Vertex v = 0; v < d.order(); ++v) best = std::max(best, eccentricity(d, v));
  return best;
}

std::size_t eccentricity(const Graph& g, Vertex v) { return eccentricity(distance_matrix(g), v); }

std::size_t diameter(const Graph& g) { return diameter(distance_matrix(g)); }

void require_valid_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw Error(ErrorCode::InvalidVertex, "vertex set over " + std::to_string(s.universe()) +
                                              " vertices used with a graph of order " +
                                              std::to_string(g.order()));
  }
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_valid_set(g, s);
  bool clique = true;
  s.for_each([&](Vertex v) {
    if (!clique) return;
    VertexSet others = s;
    others.erase(v);
    clique = others.is_subset_of(g.neighborhood(v));
  });
  return clique;
}

}  // namespace geohull
