#include "geohull/hull_solver.hpp"

#include <vector>

#include "geohull/chordal.hpp"
#include "geohull/error.hpp"

namespace geohull {

// Search outline.
//
// Every simplicial vertex belongs to every hull set: an interior vertex of a
// shortest path has two consecutive neighbors on it, and if those are
// adjacent the path is not shortest. So the search starts from the mandatory
// set M of simplicial vertices and looks for the fewest extra picks.
//
// Iterative deepening on the number r of extra picks. Picks are taken in
// ascending index order and a candidate w is skipped when w is already in
// hull(T) for the current partial set T. This loses no minimum hull set S:
// if w ∈ hull(T) with T ⊆ S \ {w}, then hull(S \ {w}) ⊇ hull(T) ∋ w, hence
// hull(S \ {w}) = hull(S) = V and S was not minimum. Because depth r - 1 was
// exhausted first, every set reached at depth r that is a hull set is
// minimum, and ascending picks make the first one found the
// lexicographically smallest.

namespace {

class Search {
 public:
  Search(const Geodesics& geo, std::optional<std::size_t> budget) : geo_(geo), budget_(budget) {}

  VertexSet closure(const VertexSet& s) {
    charge();
    return hull(geo_, s);
  }

  // Tries to complete `closed` to the whole vertex set with exactly
  // `remaining` more picks, each with index >= start.
  bool extend(const VertexSet& closed, Vertex start, std::size_t remaining) {
    const auto n = static_cast<Vertex>(geo_.order());
    for (Vertex w = start; w < n; ++w) {
      if (closed.contains(w)) continue;
      charge();
      const VertexSet next = extend_hull(geo_, closed, w);
      if (remaining == 1) {
        if (next.size() == n) {
          picks_.push_back(w);
          return true;
        }
        continue;
      }
      picks_.push_back(w);
      if (extend(next, w + 1, remaining - 1)) return true;
      picks_.pop_back();
    }
    return false;
  }

  void set_lower_bound(std::size_t bound) { lower_bound_ = bound; }
  const std::vector<Vertex>& picks() const { return picks_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  void charge() {
    if (budget_ && evaluations_ >= *budget_) throw BudgetExceeded(lower_bound_, evaluations_);
    ++evaluations_;
  }

  const Geodesics& geo_;
  std::optional<std::size_t> budget_;
  std::size_t evaluations_ = 0;
  std::size_t lower_bound_ = 1;
  std::vector<Vertex> picks_;
};

void require_nonempty(const Geodesics& geo) {
  if (geo.order() == 0) throw Error(ErrorCode::EmptyGraph, "hull number of the empty graph");
}

}  // namespace

std::optional<HullNumberResult> minimum_hull_set(const Geodesics& geo,
                                                 const HullSearchOptions& options) {
  require_nonempty(geo);
  const std::size_t n = geo.order();
  const VertexSet mandatory = simplicial_vertices(geo.graph());
  const std::size_t base = mandatory.size();

  Search search(geo, options.node_budget);
  search.set_lower_bound(std::max<std::size_t>(base, 1));
  if (options.max_size && base > *options.max_size) return std::nullopt;
  const VertexSet closed = search.closure(mandatory);
  if (closed.size() == n) return HullNumberResult{base, mandatory, search.evaluations()};

  for (std::size_t extra = 1; base + extra <= n; ++extra) {
    if (options.max_size && base + extra > *options.max_size) return std::nullopt;
    search.set_lower_bound(base + extra);
    if (search.extend(closed, 0, extra)) {
      VertexSet witness = mandatory;
      for (Vertex v : search.picks()) witness.insert(v);
      return HullNumberResult{base + extra, std::move(witness), search.evaluations()};
    }
  }
  // Unreachable on a connected graph: V itself is a hull set.
  throw Error(ErrorCode::NotAWitness, "hull search exhausted without a hull set");
}

HullNumberResult hull_number_exact(const Geodesics& geo, std::optional<std::size_t> node_budget) {
  return *minimum_hull_set(geo, {.node_budget = node_budget, .max_size = std::nullopt});
}

HullNumberResult hull_number_bruteforce(const Geodesics& geo, std::size_t vertex_cap) {
  require_nonempty(geo);
  const std::size_t n = geo.order();
  if (n > vertex_cap) {
    throw Error(ErrorCode::TooLarge, "brute force limited to " + std::to_string(vertex_cap) +
                                         " vertices, graph has " + std::to_string(n));
  }
  std::size_t evaluations = 0;
  for (std::size_t size = 1; size <= n; ++size) {
    // Lexicographic walk over size-element index combinations.
    std::vector<Vertex> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      const VertexSet s = VertexSet::of(n, pick);
      ++evaluations;
      if (is_hull_set(geo, s)) return HullNumberResult{size, s, evaluations};
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::NotAWitness, "no hull set found");
}

}  // namespace geohull
