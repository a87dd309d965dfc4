#include <algorithm>
#include <optional>
#include <sstream>

#include "geohull/chordal.hpp"
#include "geohull/convexity.hpp"
#include "geohull/error.hpp"
#include "geohull/hull_solver.hpp"
#include "geohull/io.hpp"
#include "geohull/reduction.hpp"

namespace geohull {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string Report::render() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  for (const std::string& note : notes) out << "INFO " << note << '\n';
  return out.str();
}

namespace {

std::string labels_of(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  s.for_each([&](Vertex v) {
    if (out.size() > 1) out += ',';
    out += g.label(v);
  });
  return out + "}";
}

}  // namespace

Report verify_structure(const ReductionGraph& rg) {
  Report report;
  const Graph& g = rg.graph;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const std::size_t expected_order = kBlockSize * rg.n + rg.m;
  add("order", g.order() == expected_order,
      std::to_string(g.order()) + " vertices, 12n+m = " + std::to_string(expected_order));

  std::optional<Geodesics> geo;
  try {
    geo.emplace(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Disconnected) throw;
  }
  const std::string disconnected = "graph is disconnected";

  if (geo) {
    const std::size_t diam = diameter(geo->distances());
    add("diameter", diam == 3, "diameter " + std::to_string(diam) + ", expected 3");
  } else {
    add("diameter", false, disconnected);
  }

  if (geo) {
    VertexSet off(g.order());
    const VertexSet bz = rg.clique_bz();
    bz.for_each([&](Vertex v) {
      if (eccentricity(geo->distances(), v) != 2) off.insert(v);
    });
    add("clique-eccentricity", off.empty(),
        off.empty() ? "all " + std::to_string(bz.size()) + " vertices of B∪Z have eccentricity 2"
                    : "eccentricity != 2 at " + labels_of(g, off));
  } else {
    add("clique-eccentricity", false, disconnected);
  }

  if (geo) {
    std::string bad;
    for (std::uint32_t i = 1; i <= rg.n; ++i) {
      const auto& d = geo->distances();
      const auto d1 = d(rg.vertex(Role::X, i), rg.vertex(Role::XBarPrime, i));
      const auto d2 = d(rg.vertex(Role::XBar, i), rg.vertex(Role::XPrime1, i));
      if (d1 != 3) bad += " dist(x" + std::to_string(i) + ",xbarp" + std::to_string(i) + ")=" + std::to_string(d1);
      if (d2 != 3) bad += " dist(xbar" + std::to_string(i) + ",xp1" + std::to_string(i) + ")=" + std::to_string(d2);
    }
    add("distance-3-pairs", bad.empty(),
        bad.empty() ? "dist(x_i,xbar'_i) = dist(xbar_i,x'^1_i) = 3 for all i" : bad.substr(1));
  } else {
    add("distance-3-pairs", false, disconnected);
  }

  {
    const auto order = rg.canonical_elimination_ordering();
    const bool peo = order.size() == g.order() && is_perfect_elimination_ordering(g, order);
    add("elimination-ordering", peo,
        peo ? "staged ordering of " + std::to_string(order.size()) + " vertices is perfect"
            : "staged ordering is not a perfect elimination ordering");
  }

  {
    VertexSet expected(g.order());
    for (std::uint32_t i = 1; i <= rg.n; ++i) {
      for (Role r : {Role::XPrime1, Role::XPrime2, Role::XBarDoublePrime}) expected.insert(rg.vertex(r, i));
    }
    const VertexSet actual = simplicial_vertices(g);
    add("simplicial-set", actual == expected,
        actual == expected ? std::to_string(actual.size()) + " simplicial vertices = {x'^1_i, x'^2_i, xbar''_i}"
                           : "simplicial " + labels_of(g, actual) + ", expected " + labels_of(g, expected));
  }

  if (geo) {
    std::string bad;
    for (std::uint32_t i = 1; i <= rg.n; ++i) {
      const VertexSet s = VertexSet::of(
          g.order(), {rg.vertex(Role::X, i), rg.vertex(Role::Z, i), rg.vertex(Role::XBar, i)});
      if (!is_concave(*geo, s)) bad += " " + labels_of(g, s);
    }
    add("variable-sets-concave", bad.empty(),
        bad.empty() ? "{x_i,z_i,xbar_i} concave for all " + std::to_string(rg.n) + " variables"
                    : "not concave:" + bad);
  } else {
    add("variable-sets-concave", false, disconnected);
  }

  if (geo) {
    std::string bad;
    for (std::size_t j = 0; j < rg.m; ++j) {
      const VertexSet s = rg.clause_set(j);
      if (!is_concave(*geo, s)) bad += " " + labels_of(g, s);
    }
    add("clause-sets-concave", bad.empty(),
        bad.empty() ? "V_j concave for all " + std::to_string(rg.m) + " clauses" : "not concave:" + bad);
  } else {
    add("clause-sets-concave", false, disconnected);
  }

  std::size_t gadget_total = 0;
  for (std::uint32_t i = 1; i <= rg.n; ++i) {
    for (auto [u, v] : rg.gadget_edges(i)) gadget_total += g.adjacent(u, v) ? 1 : 0;
  }
  report.notes.push_back("gadget size per variable: " + std::to_string(kGadgetVertices) +
                         " vertices, " + std::to_string(kGadgetEdges) +
                         " edges (the original construction counts 25 edges); " +
                         std::to_string(gadget_total) + " gadget edges present in total");
  return report;
}

EquivalenceReport equivalence_check(const RestrictedCnf& cnf, const EquivalenceOptions& options) {
  if (cnf.variable_count > options.max_variables) {
    throw Error(ErrorCode::TooLarge, "equivalence check limited to " +
                                         std::to_string(options.max_variables) + " variables, got " +
                                         std::to_string(cnf.variable_count));
  }
  const ReductionGraph rg = build_reduction(cnf);
  const Geodesics geo(rg.graph);
  const std::size_t k = rg.k();

  EquivalenceReport out;
  const std::vector<Assignment> models = satisfying_assignments(cnf, options.max_variables);
  out.satisfiable = !models.empty();
  out.satisfying_count = models.size();

  const auto found = minimum_hull_set(geo, {.node_budget = options.node_budget, .max_size = k});
  if (found) {
    out.hull_number = found->hull_number;
    out.witness = found->witness;
  }
  Report& report = out.report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const std::string k_text = "4n = " + std::to_string(k);
  const std::string h_text = found ? "h(G) = " + std::to_string(found->hull_number) + " <= " + k_text
                                   : "h(G) > " + k_text;
  add("sat-iff-hull-number", out.satisfiable == found.has_value(),
      (out.satisfiable ? "satisfiable (" + std::to_string(models.size()) + " models)"
                       : std::string("unsatisfiable")) +
          ", " + h_text);

  add("hull-number-at-least-4n", !found || found->hull_number == k,
      found ? "h(G) = " + std::to_string(found->hull_number) : "no hull set of size <= " + k_text);

  {
    std::size_t good = 0;
    for (const Assignment& a : models) {
      const VertexSet s = assignment_to_hull_set(rg, a);
      if (s.size() == k && is_hull_set(geo, s)) ++good;
    }
    add("forward", good == models.size(),
        std::to_string(good) + "/" + std::to_string(models.size()) +
            " satisfying assignments give hull sets of size " + std::to_string(k));
  }

  if (found) {
    const VertexSet& w = *out.witness;
    VertexSet simplicial = simplicial_vertices(rg.graph);
    const bool has_simplicial = simplicial.size() == 3 * rg.n && simplicial.is_subset_of(w);
    std::size_t one_each = 0;
    for (std::uint32_t i = 1; i <= rg.n; ++i) {
      const int hits = int{w.contains(rg.vertex(Role::X, i))} + int{w.contains(rg.vertex(Role::Z, i))} +
                       int{w.contains(rg.vertex(Role::XBar, i))};
      if (hits == 1) ++one_each;
    }
    add("witness-shape", has_simplicial && one_each == rg.n,
        "witness " + format_vertex_set(w) + (has_simplicial ? " contains" : " misses") +
            " the 3n simplicial vertices; " + std::to_string(one_each) + "/" + std::to_string(rg.n) +
            " variables with exactly one of {x_i,z_i,xbar_i}");

    bool recovered = false;
    std::string detail;
    try {
      const Assignment a = hull_set_to_assignment(rg, w);
      recovered = satisfies(cnf, a);
      for (bool value : a) detail += value ? 'T' : 'F';
      detail = "extracted assignment " + detail + (recovered ? " satisfies" : " falsifies") + " the formula";
    } catch (const Error& e) {
      detail = e.what();
    }
    add("backward", recovered, detail);
  } else {
    add("witness-shape", true, "no hull set of size <= " + k_text + " to inspect");
    add("backward", true, "no hull set of size <= " + k_text + " to extract from");
  }
  return out;
}

}  // namespace geohull
