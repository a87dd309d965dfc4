#pragma once

#include <cstddef>
#include <optional>

#include "geohull/convexity.hpp"

namespace geohull {

struct HullNumberResult {
  std::size_t hull_number = 0;
  // A hull set of size hull_number; the lexicographically first one.
  VertexSet witness;
  // Hull evaluations spent.
  std::size_t evaluations = 0;
};

struct HullSearchOptions {
  // Maximum number of hull evaluations; unlimited when empty.
  std::optional<std::size_t> node_budget;
  // Give up once every hull set of size <= max_size has been ruled out.
  std::optional<std::size_t> max_size;
};

inline constexpr std::size_t kBruteforceVertexCap = 14;

// Minimum hull set, or nullopt when none has size <= options.max_size.
// Throws Error(EmptyGraph) and BudgetExceeded.
std::optional<HullNumberResult> minimum_hull_set(const Geodesics& geo,
                                                 const HullSearchOptions& options = {});

// h(G) with a witness. Throws Error(EmptyGraph) and BudgetExceeded.
HullNumberResult hull_number_exact(const Geodesics& geo,
                                   std::optional<std::size_t> node_budget = std::nullopt);

// Reference search over all subsets in (size, lexicographic) order.
// Throws Error(TooLarge) above vertex_cap and Error(EmptyGraph).
HullNumberResult hull_number_bruteforce(const Geodesics& geo,
                                        std::size_t vertex_cap = kBruteforceVertexCap);

}  // namespace geohull
