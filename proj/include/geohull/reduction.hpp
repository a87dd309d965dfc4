#pragma once

// SAT-to-chordal-graph reduction for the hull number.
//
// Input is a restricted CNF: clauses of at most three literals, and every
// variable occurring positively in exactly two clauses and negatively in
// exactly one, all three distinct. Each variable contributes a 12-vertex
// block (y, ybar, z and a 9-vertex gadget); clause vertices and all y, ybar,
// z vertices form one clique. The formula is satisfiable iff the hull
// number of the resulting chordal graph is at most 4n.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geohull/graph.hpp"

namespace geohull {

struct Literal {
  std::uint32_t variable;  // 1-based
  bool positive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct RestrictedCnf {
  std::size_t variable_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const RestrictedCnf&, const RestrictedCnf&) = default;
};

// Truth value per variable; entry i-1 is variable i.
using Assignment = std::vector<bool>;

// Every violated restriction, one message each; empty means valid.
std::vector<std::string> validate_restricted(const RestrictedCnf& cnf);

bool satisfies(const RestrictedCnf& cnf, const Assignment& a);
// All satisfying assignments in counting order (variable 1 is the low bit,
// false before true). Throws Error(TooLarge) above max_variables.
std::vector<Assignment> satisfying_assignments(const RestrictedCnf& cnf,
                                               std::size_t max_variables = 20);

// DIMACS "p cnf <n> <m>" with 0-terminated clauses; 'c' lines are comments.
// Throws Error(ParseError). Does not validate the restriction.
RestrictedCnf read_dimacs(std::istream& in);
RestrictedCnf read_dimacs_file(const std::filesystem::path& path);
void write_dimacs(std::ostream& out, const RestrictedCnf& cnf);

// Deterministic in (n, seed); the result always passes validate_restricted.
RestrictedCnf random_restricted_cnf(std::size_t n, std::uint64_t seed);

enum class Role : std::uint8_t {
  Clause,           // c_j
  Y,                // y_i
  YBar,             // ybar_i
  Z,                // z_i
  X,                // x_i
  XPrime,           // x'_i
  X1,               // x^1_i
  X2,               // x^2_i
  XPrime1,          // x'^1_i
  XPrime2,          // x'^2_i
  XBar,             // xbar_i
  XBarPrime,        // xbar'_i
  XBarDoublePrime,  // xbar''_i
};

struct RoleName {
  Role role;
  std::uint32_t index;  // 1-based clause or variable index

  friend bool operator==(const RoleName&, const RoleName&) = default;
};

// Label grammar: c<j>, y<i>, ybar<i>, z<i>, x<i>, xp<i>, x1<i>, x2<i>,
// xp1<i>, xp2<i>, xbar<i>, xbarp<i>, xbarpp<i>.
std::string to_string(const RoleName& name);

// Clause indices (0-based) holding the literals of one variable.
struct Occurrences {
  std::size_t positive_first;   // smaller of the two positive clauses
  std::size_t positive_second;
  std::size_t negative;
};

struct ReductionGraph {
  Graph graph;
  std::vector<RoleName> roles;  // roles[v] names vertex v
  std::size_t n = 0;            // variables
  std::size_t m = 0;            // clauses
  std::vector<Occurrences> occurrences;  // per variable, 0-based

  std::size_t k() const noexcept { return 4 * n; }

  // Vertex layout: c_1..c_m first, then one 12-vertex block per variable in
  // the order of the Role enum from Y to XBarDoublePrime.
  Vertex vertex(Role role, std::uint32_t index) const;
  // B ∪ Z: clause vertices and every y_i, ybar_i, z_i.
  VertexSet clique_bz() const;
  // The 26 gadget edges of variable i (1-based), in construction order.
  std::vector<Edge> gadget_edges(std::uint32_t variable) const;
  // The elimination ordering used to show chordality: x'^1, x'^2, xbar'' of
  // every variable; then x^1, x^2, xbar'; then x'; then x, xbar; then B ∪ Z.
  std::vector<Vertex> canonical_elimination_ordering() const;
  // The concave set attached to clause j (0-based): c_j plus x, x', x^1 or
  // x^2 of each variable occurring positively in it, plus xbar, xbar' of each
  // variable occurring negatively.
  VertexSet clause_set(std::size_t clause) const;
};

inline constexpr std::size_t kGadgetVertices = 9;
inline constexpr std::size_t kGadgetEdges = 26;
inline constexpr std::size_t kBlockSize = 12;

// Throws Error(InvalidInstance) when validate_restricted reports anything.
ReductionGraph build_reduction(const RestrictedCnf& cnf);

// One line per vertex: "<index> <role>".
void write_labels(std::ostream& out, const ReductionGraph& rg);

// x'^1_i, x'^2_i, xbar''_i for all i, plus x_i (true) or xbar_i (false).
// Throws Error(InvalidInstance) when a.size() != n.
VertexSet assignment_to_hull_set(const ReductionGraph& rg, const Assignment& a);

// Variable i is true iff x_i ∈ s; no checks on s.
Assignment extract_assignment(const ReductionGraph& rg, const VertexSet& s);

// extract_assignment for a hull set of at most 4n vertices. Throws Error(NotAWitness) when s is not a
// hull set or has more than 4n members.
Assignment hull_set_to_assignment(const ReductionGraph& rg, const VertexSet& s);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
  // "PASS <name>: <detail>" / "FAIL ..." per check, then "INFO <note>" lines.
  std::string render() const;
};

// The eight structural checks (order, diameter, B ∪ Z eccentricity, the two
// distance-3 pairs, the elimination ordering, the simplicial set, and the
// two families of concave sets), plus an informational edge-count note.
Report verify_structure(const ReductionGraph& rg);

struct EquivalenceOptions {
  std::size_t max_variables = 12;
  std::optional<std::size_t> node_budget;
};

struct EquivalenceReport {
  Report report;
  bool satisfiable = false;
  std::size_t satisfying_count = 0;
  // h(G) when h(G) <= 4n; empty when the search ruled out every size <= 4n.
  std::optional<std::size_t> hull_number;
  std::optional<VertexSet> witness;
};

// Brute-force satisfiability against the hull-number search on the reduction.
// Throws Error(TooLarge) above options.max_variables and
// Error(InvalidInstance) for unrestricted input.
EquivalenceReport equivalence_check(const RestrictedCnf& cnf, const EquivalenceOptions& options = {});

}  // namespace geohull
