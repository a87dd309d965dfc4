#include <doctest.h>

#include "geohull/chordal.hpp"
#include "geohull/error.hpp"
#include "geohull/fixtures.hpp"
#include "geohull/hull_solver.hpp"
#include "geohull/reduction.hpp"
#include "support/oracles.hpp"

using namespace geohull;
using geohull::testing::Rng;

TEST_CASE("small exact hull numbers") {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    const auto r = hull_number_exact(Geodesics(build_graph(n, edges)));
    CHECK(r.hull_number == 2);
    CHECK(r.witness == VertexSet::of(n, {0, static_cast<Vertex>(n - 1)}));
  }

  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    const auto r = hull_number_exact(Geodesics(build_graph(n, edges)));
    CHECK(r.hull_number == n);
    CHECK(r.witness == VertexSet::full(n));
  }

  const Geodesics fig2(fixture_fig2());
  const auto exact = hull_number_exact(fig2);
  const auto brute = hull_number_bruteforce(fig2);
  CHECK(brute.hull_number == 2);
  CHECK(brute.witness == VertexSet::of(5, {0, 4}));
  CHECK(exact.hull_number == 2);
  CHECK(exact.witness == brute.witness);
}

TEST_CASE("brute force examples and limits") {
  CHECK(hull_number_bruteforce(Geodesics(build_graph(1, std::span<const Edge>{}))).hull_number == 1);

  const Geodesics c4(build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  const auto r = hull_number_bruteforce(c4);
  CHECK(r.hull_number == 2);
  CHECK(r.witness == VertexSet::of(4, {0, 2}));
  CHECK(hull_number_exact(c4).witness == r.witness);

  std::vector<Edge> path;
  for (Vertex v = 0; v + 1 < 15; ++v) path.emplace_back(v, v + 1);
  const Geodesics p15(build_graph(15, path));
  try {
    hull_number_bruteforce(p15);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK(hull_number_bruteforce(p15, 15).hull_number == 2);

  const Geodesics empty(build_graph(0, std::span<const Edge>{}));
  CHECK_THROWS_AS(hull_number_exact(empty), Error);
  CHECK_THROWS_AS(hull_number_bruteforce(empty), Error);
}

TEST_CASE("node budget") {
  const ReductionGraph rg = build_reduction(fixture_sample_cnf());
  const Geodesics geo(rg.graph);
  try {
    hull_number_exact(geo, 5);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    // Nine simplicial vertices are forced; at least one more pick is needed.
    CHECK(e.lower_bound() >= 10);
    CHECK(e.lower_bound() <= 12);
  }
  const auto unlimited = hull_number_exact(geo);
  const auto enough = hull_number_exact(geo, unlimited.evaluations);
  CHECK(enough.witness == unlimited.witness);
}

TEST_CASE("bounded search") {
  const Geodesics fig2(fixture_fig2());
  CHECK_FALSE(minimum_hull_set(fig2, {.node_budget = std::nullopt, .max_size = 1}).has_value());
  const auto r = minimum_hull_set(fig2, {.node_budget = std::nullopt, .max_size = 2});
  REQUIRE(r.has_value());
  CHECK(r->hull_number == 2);
}

TEST_CASE("sample reduction has hull number 4n") {
  const ReductionGraph rg = build_reduction(fixture_sample_cnf());
  const auto r = hull_number_exact(Geodesics(rg.graph));
  CHECK(r.hull_number == 12);
  CHECK(simplicial_vertices(rg.graph).is_subset_of(r.witness));
}

TEST_CASE("single-variable reduction has hull number 5") {
  // (x1), (x1), (¬x1) is unsatisfiable, so no hull set of size 4 exists.
  const ReductionGraph rg = build_reduction(fixture_single_variable_cnf());
  const Geodesics geo(rg.graph);
  const auto brute = hull_number_bruteforce(geo, 15);
  REQUIRE(brute.hull_number == 5);
  const auto exact = hull_number_exact(geo);
  CHECK(exact.hull_number == 5);
  CHECK(exact.witness == brute.witness);
}

TEST_CASE("exact search agrees with brute force, witness included") {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::random_connected_graph_between(rng, 1, 10);
    const Geodesics geo(g);
    const auto exact = hull_number_exact(geo);
    const auto brute = hull_number_bruteforce(geo);
    REQUIRE(exact.hull_number == brute.hull_number);
    REQUIRE(exact.witness == brute.witness);
    REQUIRE(exact.witness.size() == exact.hull_number);
    REQUIRE(is_hull_set(geo, exact.witness));
    REQUIRE(simplicial_vertices(g).is_subset_of(exact.witness));
    REQUIRE(hull_number_exact(geo).witness == exact.witness);
  }
}
