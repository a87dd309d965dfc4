#include <doctest.h>

#include "geohull/chordal.hpp"
#include "geohull/error.hpp"
#include "geohull/fixtures.hpp"
#include "support/oracles.hpp"

using namespace geohull;
using geohull::testing::Rng;

namespace {

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return build_graph(n, edges);
}

}  // namespace

TEST_CASE("simplicial vertices") {
  std::vector<Edge> k5;
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  }
  CHECK(simplicial_vertices(build_graph(5, k5)) == VertexSet::full(5));
  // N(x1) = {x2}; N(z) = {x3, t} with x3t an edge; x2, x3, t each have two
  // non-adjacent neighbors.
  CHECK(simplicial_vertices(fixture_fig2()) == VertexSet::of(5, {0, 4}));
  CHECK(simplicial_vertices(cycle_graph(4)).empty());
  // Isolated vertices count: their neighborhood is empty.
  CHECK(simplicial_vertices(build_graph(2, std::span<const Edge>{})) == VertexSet::full(2));
}

TEST_CASE("perfect elimination ordering check") {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> ok{0, 2, 1};
  CHECK(is_perfect_elimination_ordering(path, ok));
  const std::vector<Vertex> middle_first{1, 0, 2};
  CHECK_FALSE(is_perfect_elimination_ordering(path, middle_first));

  const Graph c4 = cycle_graph(4);
  std::vector<Vertex> order{0, 1, 2, 3};
  do {
    CHECK_FALSE(is_perfect_elimination_ordering(c4, order));
  } while (std::next_permutation(order.begin(), order.end()));

  const std::vector<Vertex> short_order{0, 1};
  const std::vector<Vertex> repeated{0, 0, 1};
  const std::vector<Vertex> out_of_range{0, 1, 3};
  CHECK_THROWS_AS(is_perfect_elimination_ordering(path, short_order), Error);
  CHECK_THROWS_AS(is_perfect_elimination_ordering(path, repeated), Error);
  try {
    is_perfect_elimination_ordering(path, out_of_range);
    FAIL("expected InvalidOrdering");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidOrdering);
  }
}

TEST_CASE("chordality examples") {
  CHECK_FALSE(chordality(cycle_graph(4)).has_value());
  CHECK_FALSE(chordality(cycle_graph(7)).has_value());

  const Graph fig2 = fixture_fig2();
  const auto peo = chordality(fig2);
  REQUIRE(peo.has_value());
  CHECK(is_perfect_elimination_ordering(fig2, *peo));

  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph tree = testing::random_connected_graph(rng, 1 + testing::below(rng, 15), 0.0);
    const auto order = chordality(tree);
    REQUIRE(order.has_value());
    REQUIRE(is_perfect_elimination_ordering(tree, *order));
  }
}

TEST_CASE("maximum cardinality search breaks ties by index") {
  CHECK(maximum_cardinality_search(build_graph(3, std::span<const Edge>{})) ==
        std::vector<Vertex>{0, 1, 2});
  // 0 first; then its neighbors 1 and 3 tie, 1 wins; 2 then has weight 1 like 3.
  CHECK(maximum_cardinality_search(build_graph(4, {{0, 1}, {0, 3}, {1, 2}})) ==
        std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("chordality matches induced cycle search") {
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::below(rng, 11);
    const Graph g = testing::random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(testing::below(rng, 100)) / 100.0);
    const auto peo = chordality(g);
    REQUIRE(peo.has_value() == !testing::oracle_has_long_induced_cycle(g));
    if (peo) {
      REQUIRE(is_perfect_elimination_ordering(g, *peo));
      if (n > 0) REQUIRE(is_simplicial(g, peo->front()));
    }
  }
}
