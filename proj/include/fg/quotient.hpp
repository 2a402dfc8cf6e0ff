#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fg/farey.hpp"

namespace fg {

/// Q(S) = {x/y : x, y in S, x <= y, y != 0}, with Q({0}) = {0}.
/// Throws DomainError on an empty set.
FractionSet quotient_set(const FractionSet& s);

struct QuotientWitness {
  Fraction x;
  Fraction y;
  Fraction quotient;  // x / y, outside F_n
};

struct ClosureReport {
  bool closed = true;
  std::optional<QuotientWitness> witness;
};

struct CoverageReport {
  bool covers = true;
  std::vector<Fraction> missing;     // F_n \ Q(S)
  std::vector<Fraction> extraneous;  // Q(S) \ F_n
};

/// Throws DomainError listing the offending elements unless s ⊆ F_n.
void require_subset_of_farey(const FractionSet& s, unsigned n);

/// Decides Q(S) ⊆ F_n. Pairs are scanned by (y, x) over the sorted set so the
/// reported witness is deterministic.
ClosureReport closure_check(const FractionSet& s, unsigned n);

/// Decides Q(S) = F_n.
CoverageReport coverage_check(const FractionSet& s, unsigned n);

/// Compatibility graph on F_n: u ~ v iff min(u,v) / max(u,v) is in F_n.
/// Cliques are exactly the subsets S with Q(S) ⊆ F_n.
class CompatGraph {
 public:
  using Row = boost::dynamic_bitset<>;

  explicit CompatGraph(unsigned n);

  unsigned order() const noexcept { return order_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Fraction>& vertices() const noexcept { return vertices_; }
  const Fraction& vertex(std::size_t i) const { return vertices_.at(i); }
  const Row& neighbours(std::size_t i) const { return adjacency_.at(i); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_.at(i).test(j); }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).count(); }

  /// Index of f, or nullopt when f is not in F_n.
  std::optional<std::size_t> index_of(const Fraction& f) const;

  FractionSet to_fractions(const Row& members) const;
  FractionSet to_fractions(const std::vector<std::size_t>& members) const;

 private:
  unsigned order_;
  std::vector<Fraction> vertices_;
  std::vector<Row> adjacency_;
};

inline CompatGraph compat_graph(unsigned n) { return CompatGraph(n); }

}  // namespace fg
