#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace geohull {

using Vertex = std::uint32_t;
// Normalized edges keep the smaller endpoint first.
using Edge = std::pair<Vertex, Vertex>;

// Subset of the vertices of a graph of a fixed order, stored as a bit vector.
// Bits at or beyond universe() are always clear.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  // Throws Error(InvalidVertex) when a member is out of range.
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  // Members in ascending order.
  std::vector<Vertex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int bit = __builtin_ctzll(w);
        fn(static_cast<Vertex>(k * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  // Removes the members of other.
  VertexSet& operator-=(const VertexSet& other);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable finite simple undirected graph on vertices 0..order()-1.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  // Sorted, normalized edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  const VertexSet& neighborhood(Vertex v) const { return neighborhoods_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return neighborhoods_.at(u).contains(v); }

  VertexSet vertices() const { return VertexSet::full(order()); }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Printable label: the vertex name when present, else the decimal index.
  std::string label(Vertex v) const;

  // Copy with printable names attached; names.size() must equal order().
  Graph with_names(std::vector<std::string> names) const;
  // Copy with the edge uv removed; throws InvalidEdge when uv is not an edge.
  Graph without_edge(Vertex u, Vertex v) const;

  // Equality ignores names.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t vertex_count, std::span<const Edge> edge_list);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> neighborhoods_;
  std::vector<std::string> names_;
};

// Deduplicates and normalizes the edge list.
// Throws Error(InvalidEdge) for self-loops and out-of-range endpoints, and
// Error(TooLarge) when vertex_count exceeds max_graph_order().
Graph build_graph(std::size_t vertex_count, std::span<const Edge> edge_list);
Graph build_graph(std::size_t vertex_count, std::initializer_list<Edge> edge_list);

std::size_t max_graph_order() noexcept;

bool is_connected(const Graph& g);

// All-pairs hop counts of a connected graph. Rows are padded for the SIMD
// kernels; the padding never equals a real distance.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t order() const noexcept { return order_; }
  std::size_t stride() const noexcept { return stride_; }

  std::uint16_t operator()(Vertex u, Vertex v) const { return data_[u * stride_ + v]; }
  // Full padded row of stride() entries.
  std::span<const std::uint16_t> row(Vertex u) const {
    return {data_.data() + static_cast<std::size_t>(u) * stride_, stride_};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  friend DistanceMatrix distance_matrix(const Graph& g);

  std::size_t order_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint16_t> data_;
};

// BFS from every vertex. Throws Error(Disconnected).
DistanceMatrix distance_matrix(const Graph& g);

std::size_t eccentricity(const DistanceMatrix& d, Vertex v);
std::size_t diameter(const DistanceMatrix& d);
// Convenience forms; each computes the distance matrix. Throw Error(Disconnected).
std::size_t eccentricity(const Graph& g, Vertex v);
std::size_t diameter(const Graph& g);

// True iff every two members of s are adjacent. Throws Error(InvalidVertex)
// when s belongs to a graph of another order.
bool is_clique(const Graph& g, const VertexSet& s);

// Throws Error(InvalidVertex) unless s.universe() == g.order().
void require_valid_set(const Graph& g, const VertexSet& s);

}  // namespace geohull
