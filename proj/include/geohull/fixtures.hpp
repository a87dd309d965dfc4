#pragma once

#include "geohull/graph.hpp"
#include "geohull/reduction.hpp"

namespace geohull {

// Five-vertex chordal graph x1,x2,x3,t,z = 0..4 with edges
// x1x2, x2x3, x2t, x3t, x3z, tz. Vertices carry those names.
Graph fixture_fig2();

// n = 3, clauses (x1 ∨ x2 ∨ x3), (x1 ∨ x2 ∨ x3), (¬x1 ∨ ¬x2 ∨ ¬x3).
RestrictedCnf fixture_sample_cnf();

// n = 1, clauses (x1), (x1), (¬x1).
RestrictedCnf fixture_single_variable_cnf();

}  // namespace geohull
