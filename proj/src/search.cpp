#include "fg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

namespace fg {

namespace {

using Row = CompatGraph::Row;
using Clock = std::chrono::steady_clock;

class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

  /// Counts one node; false once the budget is spent (sticky across threads).
  bool charge() {
    if (aborted_.load(std::memory_order_relaxed)) return false;
    auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.max_nodes || ((n & 1023) == 0 && Clock::now() - start_ > budget_.max_time)) {
      aborted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool aborted() const { return aborted_.load(std::memory_order_relaxed); }

  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

  std::string describe() const {
    return "search budget exhausted (" + std::to_string(budget_.max_nodes) + " nodes / " +
           std::to_string(budget_.max_time.count()) + " ms)";
  }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

void canonicalize(std::vector<FractionSet>& cliques) {
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
}

// Branch-and-bound over the interior vertices, relabelled 0..m-1 in
// branching order. Adjacency rows are in the relabelled index space.
class InteriorSearch {
 public:
  struct Branch {
    std::size_t incumbent = 0;
    std::vector<Row> cliques;
    std::uint64_t nodes = 0;
    bool done = false;
  };

  InteriorSearch(std::vector<Row> adjacency, std::size_t seed, BudgetGuard& guard)
      : adjacency_(std::move(adjacency)), seed_(seed), guard_(guard) {}

  std::size_t size() const { return adjacency_.size(); }

  /// Cliques whose lowest-ordered vertex is `first`.
  Branch run_branch(std::size_t first) const {
    Branch out;
    out.incumbent = seed_;
    const std::size_t m = size();
    Row clique(m);
    clique.set(first);
    Row candidates = adjacency_[first];
    for (std::size_t j = 0; j <= first; ++j) candidates.reset(j);
    out.done = expand(clique, 1, candidates, out);
    return out;
  }

 private:
  bool expand(Row& clique, std::size_t clique_size, Row candidates, Branch& out) const {
    ++out.nodes;
    if (!guard_.charge()) return false;

    if (candidates.none()) {
      if (clique_size > out.incumbent) {
        out.incumbent = clique_size;
        out.cliques.clear();
      }
      if (clique_size == out.incumbent) out.cliques.push_back(clique);
      return true;
    }

    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);

    for (std::size_t k = order.size(); k-- > 0;) {
      if (clique_size + colour[k] < out.incumbent) return true;
      const std::size_t v = order[k];
      clique.set(v);
      if (!expand(clique, clique_size + 1, candidates & adjacency_[v], out)) return false;
      clique.reset(v);
      candidates.reset(v);
    }
    return true;
  }

  // Greedy sequential colouring in ascending index order; `order` lists the
  // vertices grouped by colour class, `colour[k]` is the class (1-based) of
  // order[k], non-decreasing.
  void colour_sort(const Row& candidates, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    Row uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Row available = uncoloured;
      for (auto v = available.find_first(); v != Row::npos; v = available.find_next(v)) {
        uncoloured.reset(v);
        available -= adjacency_[v];
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  std::vector<Row> adjacency_;
  std::size_t seed_;
  BudgetGuard& guard_;
};

}  // namespace

SearchResult max_cliques(const CompatGraph& g, const SearchOptions& options) {
  BudgetGuard guard(options.budget);
  const std::size_t v = g.size();

  std::vector<std::size_t> universal;
  std::vector<std::size_t> interior;
  for (std::size_t i = 0; i < v; ++i) {
    (g.degree(i) + 1 == v ? universal : interior).push_back(i);
  }
  std::stable_sort(interior.begin(), interior.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });

  const std::size_t m = interior.size();
  std::vector<Row> local(m, Row(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && g.adjacent(interior[a], interior[b])) local[a].set(b);
    }
  }

  std::size_t seed = 0;
  {
    Row candidates(m);
    candidates.set();
    for (std::size_t a = 0; a < m; ++a) {
      if (candidates.test(a)) {
        ++seed;
        candidates &= local[a];
      }
    }
  }

  InteriorSearch search(std::move(local), seed, guard);
  std::vector<InteriorSearch::Branch> branches(m);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < m && !guard.aborted();) {
      branches[i] = search.run_branch(i);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, std::max<std::size_t>(m, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchResult result;
  result.nodes_explored = 1;  // root: the universal core
  std::size_t best_interior = 0;
  for (const auto& b : branches) {
    result.nodes_explored += b.nodes;
    if (!b.cliques.empty()) best_interior = std::max(best_interior, b.incumbent);
  }

  auto to_set = [&](const Row* members) {
    FractionSet s;
    for (auto u : universal) s.insert(g.vertex(u));
    if (members) {
      for (auto a = members->find_first(); a != Row::npos; a = members->find_next(a)) {
        s.insert(g.vertex(interior[a]));
      }
    }
    return s;
  };

  result.max_size = universal.size() + best_interior;
  if (m == 0) {
    result.cliques.push_back(to_set(nullptr));
  }
  for (const auto& b : branches) {
    if (b.cliques.empty() || b.incumbent != best_interior) continue;
    for (const auto& c : b.cliques) result.cliques.push_back(to_set(&c));
  }
  canonicalize(result.cliques);
  result.elapsed = guard.elapsed();

  if (guard.aborted() || !std::all_of(branches.begin(), branches.end(), [](const auto& b) { return b.done; })) {
    throw BudgetExceeded(guard.describe() + " on F_" + std::to_string(g.order()), std::move(result));
  }
  return result;
}

SearchResult max_cliques_naive(const CompatGraph& g) {
  const std::size_t v = g.size();
  if (v > 25) {
    throw DomainError("naive clique oracle limited to 25 vertices, F_" + std::to_string(g.order()) + " has " +
                      std::to_string(v));
  }
  auto start = Clock::now();

  std::vector<std::uint32_t> closed_nbhd(v);
  for (std::size_t i = 0; i < v; ++i) {
    closed_nbhd[i] = std::uint32_t{1} << i;
    for (std::size_t j = 0; j < v; ++j) {
      if (g.adjacent(i, j)) closed_nbhd[i] |= std::uint32_t{1} << j;
    }
  }

  const std::uint64_t total = std::uint64_t{1} << v;
  int best = 0;
  std::vector<std::uint32_t> winners;
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    const int size = std::popcount(mask);
    if (size < best) continue;
    bool clique = true;
    for (auto rest = mask; rest != 0 && clique; rest &= rest - 1) {
      clique = (closed_nbhd[std::countr_zero(rest)] & mask) == mask;
    }
    if (!clique) continue;
    if (size > best) {
      best = size;
      winners.clear();
    }
    winners.push_back(mask);
  }

  SearchResult result;
  result.max_size = static_cast<std::size_t>(best);
  for (auto mask : winners) {
    std::vector<std::size_t> members;
    for (auto rest = mask; rest != 0; rest &= rest - 1) members.push_back(std::countr_zero(rest));
    result.cliques.push_back(g.to_fractions(members));
  }
  canonicalize(result.cliques);
  result.nodes_explored = total;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return result;
}

namespace {

class MaximalEnumerator {
 public:
  MaximalEnumerator(const CompatGraph& g, std::size_t min_size, BudgetGuard& guard)
      : g_(g), min_size_(min_size), guard_(guard) {}

  bool run() {
    Row clique(g_.size());
    Row candidates(g_.size());
    candidates.set();
    Row excluded(g_.size());
    return expand(clique, candidates, excluded);
  }

  std::vector<FractionSet>& found() { return found_; }

 private:
  bool expand(Row& clique, Row candidates, Row excluded) {
    if (!guard_.charge()) return false;
    if (candidates.none()) {
      if (excluded.none() && clique.count() >= min_size_) found_.push_back(g_.to_fractions(clique));
      return true;
    }
    if (clique.count() + candidates.count() < min_size_) return true;

    // Pivot: the vertex of candidates ∪ excluded with most neighbours in candidates.
    std::size_t pivot = Row::npos;
    std::size_t best = 0;
    const Row pool = candidates | excluded;
    for (auto u = pool.find_first(); u != Row::npos; u = pool.find_next(u)) {
      std::size_t c = (candidates & g_.neighbours(u)).count();
      if (pivot == Row::npos || c > best) {
        pivot = u;
        best = c;
      }
    }

    const Row branch = candidates - g_.neighbours(pivot);
    for (auto v = branch.find_first(); v != Row::npos; v = branch.find_next(v)) {
      clique.set(v);
      if (!expand(clique, candidates & g_.neighbours(v), excluded & g_.neighbours(v))) return false;
      clique.reset(v);
      candidates.reset(v);
      excluded.set(v);
    }
    return true;
  }

  const CompatGraph& g_;
  std::size_t min_size_;
  BudgetGuard& guard_;
  std::vector<FractionSet> found_;
};

}  // namespace

std::vector<FractionSet> all_maximal_closed_sets(const CompatGraph& g, std::size_t min_size,
                                                 const SearchBudget& budget) {
  if (min_size == 0) throw DomainError("min_size must be >= 1");
  BudgetGuard guard(budget);
  MaximalEnumerator e(g, min_size, guard);
  const bool done = e.run();
  canonicalize(e.found());
  if (!done) {
    SearchResult partial;
    partial.cliques = std::move(e.found());
    for (const auto& c : partial.cliques) partial.max_size = std::max(partial.max_size, c.size());
    partial.elapsed = guard.elapsed();
    throw BudgetExceeded(guard.describe() + " enumerating maximal sets of F_" + std::to_string(g.order()),
                         std::move(partial));
  }
  return std::move(e.found());
}

}  // namespace fg
