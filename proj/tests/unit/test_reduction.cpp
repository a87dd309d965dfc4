#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "geohull/chordal.hpp"
#include "geohull/convexity.hpp"
#include "geohull/error.hpp"
#include "geohull/fixtures.hpp"
#include "geohull/reduction.hpp"
#include "support/oracles.hpp"

using namespace geohull;
using geohull::testing::Rng;

namespace {

Literal pos(std::uint32_t v) { return {v, true}; }
Literal neg(std::uint32_t v) { return {v, false}; }

bool contains_message(const std::vector<std::string>& messages, const std::string& needle) {
  return std::any_of(messages.begin(), messages.end(),
                     [&](const std::string& m) { return m.find(needle) != std::string::npos; });
}

// Straight truth-table evaluation, independent of satisfies().
std::size_t count_models(const RestrictedCnf& cnf) {
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cnf.variable_count); ++bits) {
    bool all = true;
    for (const Clause& c : cnf.clauses) {
      bool any = false;
      for (const Literal& l : c) any = any || (((bits >> (l.variable - 1)) & 1U) == 1U) == l.positive;
      all = all && any;
    }
    count += all ? 1 : 0;
  }
  return count;
}

Assignment assignment_from_bits(std::size_t n, std::uint64_t bits) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = ((bits >> i) & 1U) != 0;
  return a;
}

ReductionGraph without(const ReductionGraph& rg, Edge e) {
  ReductionGraph out = rg;
  out.graph = rg.graph.without_edge(e.first, e.second);
  return out;
}

}  // namespace

TEST_CASE("restriction validation") {
  CHECK(validate_restricted(fixture_sample_cnf()).empty());
  CHECK(validate_restricted(fixture_single_variable_cnf()).empty());

  const RestrictedCnf once{1, {{pos(1)}, {neg(1)}}};
  const auto v1 = validate_restricted(once);
  CHECK(contains_message(v1, "variable 1: 1 positive occurrence, expected 2"));

  const RestrictedCnf wide{4, {{pos(1), pos(2), pos(3), pos(4)}}};
  CHECK(contains_message(validate_restricted(wide), "clause 1: clause size 4 > 3"));

  const RestrictedCnf empty_clause{1, {{pos(1)}, {pos(1)}, {neg(1)}, {}}};
  CHECK(contains_message(validate_restricted(empty_clause), "clause 4: empty clause"));

  const RestrictedCnf both{1, {{pos(1), neg(1)}, {pos(1)}}};
  CHECK(contains_message(validate_restricted(both), "variable 1: both polarities in clause 1"));

  const RestrictedCnf out_of_range{1, {{pos(1)}, {pos(1)}, {neg(1)}, {pos(2)}}};
  CHECK(contains_message(validate_restricted(out_of_range), "variable 2 outside 1..1"));

  const RestrictedCnf repeated{1, {{pos(1), pos(1)}, {neg(1)}}};
  CHECK(contains_message(validate_restricted(repeated), "literal x1 repeated"));

  CHECK_FALSE(validate_restricted(RestrictedCnf{}).empty());

  try {
    build_reduction(once);
    FAIL("expected InvalidInstance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInstance);
  }
}

TEST_CASE("satisfiability helpers") {
  const RestrictedCnf sample = fixture_sample_cnf();
  const auto models = satisfying_assignments(sample);
  CHECK(models.size() == count_models(sample));
  CHECK(models.size() == 6);
  for (const Assignment& a : models) CHECK(satisfies(sample, a));
  CHECK_FALSE(satisfies(sample, Assignment{false, false, false}));
  CHECK_FALSE(satisfies(sample, Assignment{true, true, true}));
  CHECK(satisfying_assignments(fixture_single_variable_cnf()).empty());
  CHECK(count_models(fixture_single_variable_cnf()) == 0);
}

TEST_CASE("sample reduction layout") {
  const ReductionGraph rg = build_reduction(fixture_sample_cnf());
  CHECK(rg.n == 3);
  CHECK(rg.m == 3);
  CHECK(rg.k() == 12);
  CHECK(rg.graph.order() == 12 * 3 + 3);
  // B ∪ Z is a clique on m + 3n = 12 vertices, plus 26 gadget edges per
  // variable, none of which joins two clique vertices.
  CHECK(rg.graph.size() == 12 * 11 / 2 + 26 * 3);

  CHECK(rg.vertex(Role::Clause, 1) == 0);
  CHECK(rg.vertex(Role::Y, 1) == 3);
  CHECK(rg.vertex(Role::XBarDoublePrime, 3) == 38);
  CHECK_THROWS_AS(rg.vertex(Role::X, 4), Error);
  CHECK_THROWS_AS(rg.vertex(Role::Clause, 0), Error);
  for (Vertex v = 0; v < rg.graph.order(); ++v) {
    CHECK(rg.vertex(rg.roles[v].role, rg.roles[v].index) == v);
    CHECK(rg.graph.label(v) == to_string(rg.roles[v]));
  }

  CHECK(rg.occurrences[0].positive_first == 0);
  CHECK(rg.occurrences[0].positive_second == 1);
  CHECK(rg.occurrences[0].negative == 2);

  const VertexSet bz = rg.clique_bz();
  CHECK(bz.size() == 12);
  CHECK(is_clique(rg.graph, bz));

  for (std::uint32_t i = 1; i <= rg.n; ++i) {
    const auto gadget = rg.gadget_edges(i);
    CHECK(gadget.size() == kGadgetEdges);
    std::set<Edge> distinct;
    for (auto [u, v] : gadget) {
      CHECK(rg.graph.adjacent(u, v));
      distinct.insert(Edge{std::min(u, v), std::max(u, v)});
    }
    CHECK(distinct.size() == kGadgetEdges);
  }

  std::ostringstream labels;
  write_labels(labels, rg);
  const std::string text = labels.str();
  CHECK(text.rfind("0 c1\n1 c2\n2 c3\n3 y1\n4 ybar1\n5 z1\n6 x1\n7 xp1\n8 x11\n", 0) == 0);
  CHECK(text.find("38 xbarpp3\n") != std::string::npos);

  const ReductionGraph one = build_reduction(fixture_single_variable_cnf());
  CHECK(one.graph.order() == 15);
  CHECK(one.graph.size() == 6 * 5 / 2 + 26);
}

TEST_CASE("canonical ordering is a permutation and perfect") {
  const ReductionGraph rg = build_reduction(fixture_sample_cnf());
  auto order = rg.canonical_elimination_ordering();
  CHECK(is_perfect_elimination_ordering(rg.graph, order));
  std::sort(order.begin(), order.end());
  for (Vertex v = 0; v < order.size(); ++v) CHECK(order[v] == v);
  CHECK(order.size() == rg.graph.order());
}

TEST_CASE("DIMACS round trip and errors") {
  std::ostringstream out;
  write_dimacs(out, fixture_sample_cnf());
  CHECK(out.str() == "p cnf 3 3\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n");
  std::istringstream in(out.str());
  CHECK(read_dimacs(in) == fixture_sample_cnf());

  std::istringstream spread("c comment\np cnf 1 3\n1\n0 1 0\n-1 0\n%\n0\n");
  CHECK(read_dimacs(spread) == fixture_single_variable_cnf());

  const auto parse_fails = [](const std::string& text) {
    std::istringstream s(text);
    try {
      read_dimacs(s);
    } catch (const Error& e) {
      return e.code() == ErrorCode::ParseError;
    }
    return false;
  };
  CHECK(parse_fails("1 2 0\n"));
  CHECK(parse_fails("p cnf 2 1\np cnf 2 1\n1 2 0\n"));
  CHECK(parse_fails("p cnf 1 1\n2 0\n"));
  CHECK(parse_fails("p cnf 1 1\n1\n"));
  CHECK(parse_fails("p cnf 1 2\n1 0\n"));
  CHECK(parse_fails("p cnf 1 1\n1 x 0\n"));
  CHECK(parse_fails(""));

  try {
    read_dimacs_file("/nonexistent/instance.cnf");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("generator is deterministic and restricted") {
  CHECK(random_restricted_cnf(5, 1) == random_restricted_cnf(5, 1));
  CHECK_FALSE(random_restricted_cnf(8, 1) == random_restricted_cnf(8, 2));
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const RestrictedCnf cnf = random_restricted_cnf(n, seed);
      REQUIRE(cnf.variable_count == n);
      REQUIRE(validate_restricted(cnf).empty());
      REQUIRE(cnf.clauses.size() >= std::max<std::size_t>(3, n));
      REQUIRE(cnf.clauses.size() <= 3 * n);
      std::ostringstream out;
      write_dimacs(out, cnf);
      std::istringstream in(out.str());
      REQUIRE(read_dimacs(in) == cnf);
    }
  }
}

TEST_CASE("assignments and hull sets") {
  const ReductionGraph rg = build_reduction(fixture_sample_cnf());
  const Geodesics geo(rg.graph);

  const VertexSet fff = assignment_to_hull_set(rg, {false, false, false});
  CHECK(fff.size() == 12);
  CHECK_FALSE(is_hull_set(geo, fff));
  // Nothing is placed in the first clause set, and concave sets are never
  // reached from outside.
  CHECK_FALSE(hull(geo, fff).contains(rg.vertex(Role::Clause, 1)));
  CHECK_THROWS_AS(hull_set_to_assignment(rg, fff), Error);

  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const Assignment a = assignment_from_bits(3, bits);
    const VertexSet s = assignment_to_hull_set(rg, a);
    REQUIRE(s.size() == rg.k());
    CHECK(extract_assignment(rg, s) == a);
    CHECK(is_hull_set(geo, s) == satisfies(fixture_sample_cnf(), a));
    if (satisfies(fixture_sample_cnf(), a)) CHECK(hull_set_to_assignment(rg, s) == a);
  }

  CHECK_THROWS_AS(assignment_to_hull_set(rg, {true}), Error);
  try {
    hull_set_to_assignment(rg, VertexSet::full(rg.graph.order()));
    FAIL("expected NotAWitness");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAWitness);
  }
  CHECK_THROWS_AS(hull_set_to_assignment(rg, VertexSet(3)), Error);
}

TEST_CASE("structural checks") {
  const Report sample = verify_structure(build_reduction(fixture_sample_cnf()));
  CHECK(sample.passed());
  REQUIRE(sample.checks.size() == 8);
  const std::vector<std::string> names{"order", "diameter", "clique-eccentricity", "distance-3-pairs",
                                       "elimination-ordering", "simplicial-set", "variable-sets-concave",
                                       "clause-sets-concave"};
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(sample.checks[i].name == names[i]);
  REQUIRE(sample.notes.size() == 1);
  CHECK(sample.notes[0].find("78 gadget edges present") != std::string::npos);
  CHECK(sample.render().rfind("PASS order: 39 vertices", 0) == 0);

  CHECK(verify_structure(build_reduction(fixture_single_variable_cnf())).passed());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Report r = verify_structure(build_reduction(random_restricted_cnf(4 + seed % 5, seed + 7)));
    CHECK_MESSAGE(r.passed(), r.render());
  }
}

TEST_CASE("equivalence on fixtures") {
  const EquivalenceReport sample = equivalence_check(fixture_sample_cnf());
  CHECK(sample.report.passed());
  CHECK(sample.satisfiable);
  CHECK(sample.satisfying_count == 6);
  REQUIRE(sample.hull_number.has_value());
  CHECK(*sample.hull_number == 12);
  REQUIRE(sample.witness.has_value());
  CHECK(satisfies(fixture_sample_cnf(), hull_set_to_assignment(build_reduction(fixture_sample_cnf()),
                                                               *sample.witness)));

  const EquivalenceReport single = equivalence_check(fixture_single_variable_cnf());
  CHECK(single.report.passed());
  CHECK_FALSE(single.satisfiable);
  CHECK_FALSE(single.hull_number.has_value());

  CHECK_THROWS_AS(equivalence_check(random_restricted_cnf(13, 0)), Error);
}

TEST_CASE("equivalence on generated instances") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const RestrictedCnf cnf = random_restricted_cnf(1 + seed % 4, seed);
    const EquivalenceReport r = equivalence_check(cnf);
    CHECK_MESSAGE(r.report.passed(), r.report.render());
    CHECK(r.satisfiable == (count_models(cnf) > 0));
    CHECK(r.hull_number.has_value() == r.satisfiable);
  }
}

TEST_CASE("gadget edge deletions seen by the structural checks") {
  const RestrictedCnf cnf = fixture_sample_cnf();
  const ReductionGraph rg = build_reduction(cnf);
  const auto models = satisfying_assignments(cnf);
  const Vertex xp = rg.vertex(Role::XPrime, 1);
  const Vertex x1 = rg.vertex(Role::X1, 1);
  const Vertex x2 = rg.vertex(Role::X2, 1);

  std::vector<Edge> unnoticed;
  for (const Edge& e : rg.gadget_edges(1)) {
    const ReductionGraph mutated = without(rg, e);
    bool detected = !verify_structure(mutated).passed();
    if (!detected) {
      const Geodesics geo(mutated.graph);
      for (const Assignment& a : models) {
        if (!is_hull_set(geo, assignment_to_hull_set(mutated, a))) detected = true;
      }
    }
    if (!detected) unnoticed.push_back(e);
  }
  // x' keeps y as a common neighbor of x^1 and x^2 and is still reached from
  // the hull set through the other of the two, so these two edges are not
  // forced by any of the checked properties.
  const std::vector<Edge> expected{{xp, x1}, {xp, x2}};
  CHECK(unnoticed == expected);

  const ReductionGraph mutated = without(rg, {xp, x1});
  CHECK(verify_structure(mutated).passed());
  CHECK_FALSE(is_simplicial(mutated.graph, x1));
  const Geodesics geo(mutated.graph);
  CHECK(interval(geo, VertexSet::of(mutated.graph.order(), {x1, x2})).contains(rg.vertex(Role::Y, 1)));
  CHECK_FALSE(interval(geo, VertexSet::of(mutated.graph.order(), {x1, x2})).contains(xp));
}
