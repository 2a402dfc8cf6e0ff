#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fg/graham.hpp"
#include "fg/search.hpp"

namespace fg {

inline constexpr std::string_view kVersion = "farey-graham 1.0.0";

enum class Theorem { T1, T3, T4, Equiv };
enum class Status { Verified, Refuted, ResourceExhausted };

std::string_view to_string(Theorem t);
std::string_view to_string(Status s);
Theorem parse_theorem(std::string_view text);
Status parse_status(std::string_view text);

/// Record of one exhaustive finite check. Field order is the serialized order.
struct Certificate {
  std::string schema_version{kVersion};
  Theorem theorem = Theorem::T1;
  unsigned n = 1;
  Status status = Status::Refuted;
  std::vector<FractionSet> expected_sets;
  std::vector<FractionSet> found_sets;
  std::size_t max_subset_size = 0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t elapsed_ms = 0;
};

/// Equality of every field except elapsed_ms.
bool canonical_equal(const Certificate& a, const Certificate& b);

/// Recomputes the status from the certificate's own fields:
///   T1            max_subset_size == n+1 and every expected set was found
///   T3, Equiv     found_sets == expected_sets (as sets of sets)
///   T4            as T3, and max_subset_size == n+1
/// ResourceExhausted is preserved.
Status assess(const Certificate& cert);

struct Discrepancy {
  std::vector<FractionSet> missing;     // expected, not found
  std::vector<FractionSet> unexpected;  // found, not expected
};

Discrepancy discrepancies(const Certificate& cert);

/// Maximum closed subsets of F_n have exactly n+1 elements; the lower bound
/// is witnessed by {0, 1, 1/2, ..., 1/n}.
Certificate verify_theorem1(unsigned n, const SearchOptions& options = {});

/// The subsets S ⊆ F_n with Q(S) = F_n are exactly the unit-fraction and
/// same-denominator families.
Certificate verify_theorem3(unsigned n, const SearchOptions& options = {});

/// The maximum closed subsets are exactly the two families, plus
/// {0, 1, 1/2, 1/3, 2/3} at n = 4.
Certificate verify_theorem4(unsigned n, const SearchOptions& options = {});

/// The n = 4 exceptional maximum set.
FractionSet exceptional_set_n4();

/// Reduced, de-duplicated canonical families, plus the exceptional set at n = 4.
std::vector<FractionSet> theorem4_expected_sets(unsigned n);

/// Closed S ⊆ F_n (at least two nonzero elements) must map to a sequence
/// with statistic <= n.
bool check_closed_to_statistic(const FractionSet& s, unsigned n);

/// A sequence with statistic <= n must map to a closed subset of F_n.
bool check_statistic_to_closed(const GrahamSequence& a, unsigned n);

struct EquivalenceReport {
  unsigned n = 0;
  std::size_t closed_to_statistic_passed = 0;
  std::size_t closed_to_statistic_failed = 0;
  std::size_t statistic_to_closed_passed = 0;
  std::size_t statistic_to_closed_failed = 0;
  std::vector<FractionSet> failures;  // Farey-side sets of failing instances

  bool passed() const {
    return closed_to_statistic_failed == 0 && statistic_to_closed_failed == 0;
  }
};

/// Exercises both directions of the closed-set / Graham-statistic
/// equivalence on `samples` generated instances each. Direction one uses
/// every maximum clique plus random cliques of compat_graph(n); direction two
/// uses sequences with statistic <= n built from divisors of M_n and scaled
/// by a random factor.
EquivalenceReport cross_check_equivalence(unsigned n, std::size_t samples, std::uint64_t seed = 1);

Certificate equivalence_certificate(unsigned n, std::size_t samples, std::uint64_t seed = 1);

}  // namespace fg
