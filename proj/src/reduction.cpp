#include "geohull/reduction.hpp"

#include <ostream>

#include "geohull/convexity.hpp"
#include "geohull/error.hpp"

namespace geohull {

std::string to_string(const RoleName& name) {
  const char* prefix = "";
  switch (name.role) {
    case Role::Clause: prefix = "c"; break;
    case Role::Y: prefix = "y"; break;
    case Role::YBar: prefix = "ybar"; break;
    case Role::Z: prefix = "z"; break;
    case Role::X: prefix = "x"; break;
    case Role::XPrime: prefix = "xp"; break;
    case Role::X1: prefix = "x1"; break;
    case Role::X2: prefix = "x2"; break;
    case Role::XPrime1: prefix = "xp1"; break;
    case Role::XPrime2: prefix = "xp2"; break;
    case Role::XBar: prefix = "xbar"; break;
    case Role::XBarPrime: prefix = "xbarp"; break;
    case Role::XBarDoublePrime: prefix = "xbarpp"; break;
  }
  return prefix + std::to_string(name.index);
}

Vertex ReductionGraph::vertex(Role role, std::uint32_t index) const {
  if (role == Role::Clause) {
    if (index == 0 || index > m) {
      throw Error(ErrorCode::InvalidVertex, "no clause " + std::to_string(index));
    }
    return static_cast<Vertex>(index - 1);
  }
  if (index == 0 || index > n) {
    throw Error(ErrorCode::InvalidVertex, "no variable " + std::to_string(index));
  }
  const std::size_t offset = static_cast<std::size_t>(role) - static_cast<std::size_t>(Role::Y);
  return static_cast<Vertex>(m + kBlockSize * (index - 1) + offset);
}

VertexSet ReductionGraph::clique_bz() const {
  VertexSet out(graph.order());
  for (std::uint32_t j = 1; j <= m; ++j) out.insert(vertex(Role::Clause, j));
  for (std::uint32_t i = 1; i <= n; ++i) {
    out.insert(vertex(Role::Y, i));
    out.insert(vertex(Role::YBar, i));
    out.insert(vertex(Role::Z, i));
  }
  return out;
}

std::vector<Edge> ReductionGraph::gadget_edges(std::uint32_t i) const {
  const Occurrences& occ = occurrences.at(i - 1);
  const auto at = [&](Role role) { return vertex(role, i); };
  const Vertex ca = static_cast<Vertex>(occ.positive_first);
  const Vertex cb = static_cast<Vertex>(occ.positive_second);
  const Vertex cc = static_cast<Vertex>(occ.negative);
  const Vertex x = at(Role::X), xp = at(Role::XPrime), x1 = at(Role::X1), x2 = at(Role::X2);
  const Vertex xp1 = at(Role::XPrime1), xp2 = at(Role::XPrime2);
  const Vertex xb = at(Role::XBar), xbp = at(Role::XBarPrime), xbpp = at(Role::XBarDoublePrime);
  const Vertex y = at(Role::Y), yb = at(Role::YBar), z = at(Role::Z);

  // Each neighborhood below is pinned by the concavity arguments: the outside
  // neighbors of x are {z, c_b, y} when c_a is the clause at hand, those of x'
  // are {x^2, y, c_b}, those of x^1 are {x'^1, y}, those of xbar are
  // {z, ybar}, those of xbar' are {xbar'', ybar}. x is adjacent to both of its
  // positive clauses so that c_j lies on a shortest x-xbar'' path.
  return {
      // x
      {x, xp}, {x, z}, {x, y}, {x, ca}, {x, cb},
      // x'
      {xp, x1}, {xp, x2}, {xp, y}, {xp, ca}, {xp, cb},
      // x^1
      {x1, xp1}, {x1, y}, {x1, ca},
      // x^2
      {x2, xp2}, {x2, y}, {x2, cb},
      // x'^1, x'^2
      {xp1, y}, {xp2, y},
      // xbar
      {xb, xbp}, {xb, z}, {xb, yb}, {xb, cc},
      // xbar'
      {xbp, xbpp}, {xbp, yb}, {xbp, cc},
      // xbar''
      {xbpp, yb},
  };
}

std::vector<Vertex> ReductionGraph::canonical_elimination_ordering() const {
  std::vector<Vertex> order;
  order.reserve(graph.order());
  const auto stage = [&](std::initializer_list<Role> roles) {
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (Role role : roles) order.push_back(vertex(role, i));
    }
  };
  stage({Role::XPrime1, Role::XPrime2, Role::XBarDoublePrime});
  stage({Role::X1, Role::X2, Role::XBarPrime});
  stage({Role::XPrime});
  stage({Role::X, Role::XBar});
  for (Vertex v : clique_bz().members()) order.push_back(v);
  return order;
}

VertexSet ReductionGraph::clause_set(std::size_t clause) const {
  VertexSet out(graph.order());
  out.insert(static_cast<Vertex>(clause));
  for (std::uint32_t i = 1; i <= n; ++i) {
    const Occurrences& occ = occurrences[i - 1];
    if (occ.positive_first == clause) {
      for (Role r : {Role::X, Role::XPrime, Role::X1}) out.insert(vertex(r, i));
    }
    if (occ.positive_second == clause) {
      for (Role r : {Role::X, Role::XPrime, Role::X2}) out.insert(vertex(r, i));
    }
    if (occ.negative == clause) {
      for (Role r : {Role::XBar, Role::XBarPrime}) out.insert(vertex(r, i));
    }
  }
  return out;
}

ReductionGraph build_reduction(const RestrictedCnf& cnf) {
  if (const auto violations = validate_restricted(cnf); !violations.empty()) {
    std::string what = "not a restricted instance";
    for (const auto& v : violations) what += "; " + v;
    throw Error(ErrorCode::InvalidInstance, what);
  }

  ReductionGraph rg;
  rg.n = cnf.variable_count;
  rg.m = cnf.clauses.size();
  rg.occurrences.resize(rg.n);
  std::vector<std::vector<std::size_t>> positive(rg.n);
  for (std::size_t j = 0; j < rg.m; ++j) {
    for (const Literal& lit : cnf.clauses[j]) {
      if (lit.positive) {
        positive[lit.variable - 1].push_back(j);
      } else {
        rg.occurrences[lit.variable - 1].negative = j;
      }
    }
  }
  for (std::size_t i = 0; i < rg.n; ++i) {
    rg.occurrences[i].positive_first = positive[i][0];
    rg.occurrences[i].positive_second = positive[i][1];
  }

  const std::size_t order = kBlockSize * rg.n + rg.m;
  rg.roles.reserve(order);
  for (std::uint32_t j = 1; j <= rg.m; ++j) rg.roles.push_back({Role::Clause, j});
  for (std::uint32_t i = 1; i <= rg.n; ++i) {
    for (auto r = static_cast<std::uint8_t>(Role::Y);
         r <= static_cast<std::uint8_t>(Role::XBarDoublePrime); ++r) {
      rg.roles.push_back({static_cast<Role>(r), i});
    }
  }

  // Placeholder graph so vertex() and clique_bz() see the final order.
  rg.graph = build_graph(order, std::span<const Edge>{});
  std::vector<Edge> edges;
  const std::vector<Vertex> clique = rg.clique_bz().members();
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
  }
  for (std::uint32_t i = 1; i <= rg.n; ++i) {
    const auto gadget = rg.gadget_edges(i);
    edges.insert(edges.end(), gadget.begin(), gadget.end());
  }
  std::vector<std::string> names;
  names.reserve(order);
  for (const RoleName& role : rg.roles) names.push_back(to_string(role));
  rg.graph = build_graph(order, edges).with_names(std::move(names));
  return rg;
}

void write_labels(std::ostream& out, const ReductionGraph& rg) {
  for (std::size_t v = 0; v < rg.roles.size(); ++v) out << v << ' ' << to_string(rg.roles[v]) << '\n';
}

VertexSet assignment_to_hull_set(const ReductionGraph& rg, const Assignment& a) {
  if (a.size() != rg.n) {
    throw Error(ErrorCode::InvalidInstance, "assignment covers " + std::to_string(a.size()) +
                                                " variables, expected " + std::to_string(rg.n));
  }
  VertexSet s(rg.graph.order());
  for (std::uint32_t i = 1; i <= rg.n; ++i) {
    s.insert(rg.vertex(Role::XPrime1, i));
    s.insert(rg.vertex(Role::XPrime2, i));
    s.insert(rg.vertex(Role::XBarDoublePrime, i));
    s.insert(rg.vertex(a[i - 1] ? Role::X : Role::XBar, i));
  }
  return s;
}

Assignment hull_set_to_assignment(const ReductionGraph& rg, const VertexSet& s) {
  require_valid_set(rg.graph, s);
  if (s.size() > rg.k()) {
    throw Error(ErrorCode::NotAWitness, "set of size " + std::to_string(s.size()) +
                                            " exceeds k = " + std::to_string(rg.k()));
  }
  if (!is_hull_set(rg.graph, s)) throw Error(ErrorCode::NotAWitness, "set is not a hull set");
  return extract_assignment(rg, s);
}

Assignment extract_assignment(const ReductionGraph& rg, const VertexSet& s) {
  Assignment a(rg.n);
  for (std::uint32_t i = 1; i <= rg.n; ++i) a[i - 1] = s.contains(rg.vertex(Role::X, i));
  return a;
}

}  // namespace geohull
