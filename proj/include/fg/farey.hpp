#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "fg/arith.hpp"

namespace fg {

/// Ordered set of reduced fractions (ascending by value).
using FractionSet = std::set<Fraction>;

/// F_n: every reduced a/b with 0 <= a <= b <= n, ascending.
struct FareySequence {
  unsigned order = 0;
  std::vector<Fraction> elements;
};

/// Generates F_n by the neighbour recurrence: from adjacent p/q < r/s the
/// next term is (k*r - p)/(k*s - q) with k = floor((n + q) / s).
FareySequence farey_sequence(unsigned n);

/// 1 + sum_{k <= n} phi(k).
std::uint64_t farey_size(unsigned n);

/// True iff f.num <= f.den <= n.
bool is_member(const Fraction& f, unsigned n);

/// {0, 1, 1/2, ..., 1/n}.
FractionSet unit_fraction_set(unsigned n);

/// {0, 1} together with k/n for 1 <= k < n, each stored reduced (2/4 -> 1/2).
FractionSet same_denominator_set(unsigned n);

FractionSet to_set(const FareySequence& seq);

}  // namespace fg
