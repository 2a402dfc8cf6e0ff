#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fg/quotient.hpp"

namespace fg {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{300'000};
};

struct SearchOptions {
  SearchBudget budget;
  unsigned threads = 1;
};

struct SearchResult {
  std::size_t max_size = 0;
  std::vector<FractionSet> cliques;  // each ascending, list lexicographic
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Thrown when a search runs out of its node or time budget. Carries the
/// best result assembled from the branches that did complete.
class BudgetExceeded : public ResourceError {
 public:
  BudgetExceeded(const std::string& what, SearchResult best)
      : ResourceError(what), best_so_far_(std::move(best)) {}

  const SearchResult& best_so_far() const noexcept { return best_so_far_; }

 private:
  SearchResult best_so_far_;
};

/// All maximum cliques of g by branch and bound.
///
/// Universal vertices (0/1 and 1/1, plus any interior vertex that happens to
/// be adjacent to everything) are in every maximum clique and are peeled off
/// first. The remaining vertices are branched in descending-degree order,
/// ties by ascending value, with a greedy-colouring upper bound. Each
/// top-level branch starts from the same greedy lower bound and is searched
/// independently, so the clique list and node count do not depend on
/// `threads`.
SearchResult max_cliques(const CompatGraph& g, const SearchOptions& options = {});

/// Exhaustive oracle over all 2^|V| vertex subsets. |V| <= 25.
SearchResult max_cliques_naive(const CompatGraph& g);

/// Every inclusion-maximal clique with at least min_size vertices
/// (Bron-Kerbosch with Tomita pivoting), sorted lexicographically.
std::vector<FractionSet> all_maximal_closed_sets(const CompatGraph& g, std::size_t min_size,
                                                 const SearchBudget& budget = {});

}  // namespace fg
