#include "geohull/fixtures.hpp"

namespace geohull {

Graph fixture_fig2() {
  return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}})
      .with_names({"x1", "x2", "x3", "t", "z"});
}

RestrictedCnf fixture_sample_cnf() {
  const Clause positive{{1, true}, {2, true}, {3, true}};
  const Clause negative{{1, false}, {2, false}, {3, false}};
  return {3, {positive, positive, negative}};
}

RestrictedCnf fixture_single_variable_cnf() { return {1, {{{1, true}}, {{1, true}}, {{1, false}}}}; }

}  // namespace geohull
