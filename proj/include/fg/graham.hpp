#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fg/farey.hpp"

namespace fg {

/// Distinct positive integers, stored ascending.
class GrahamSequence {
 public:
  GrahamSequence() = default;

  /// Sorts `terms`; throws DomainError on a zero or a repeated term.
  explicit GrahamSequence(std::vector<Wide> terms);

  const std::vector<Wide>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Wide operator[](std::size_t i) const { return terms_.at(i); }

  /// Every term multiplied by c (c >= 1).
  GrahamSequence scaled(Wide c) const;

  friend bool operator==(const GrahamSequence&, const GrahamSequence&) = default;

 private:
  std::vector<Wide> terms_;
};

std::string to_string(const GrahamSequence& a);

struct StatReport {
  Wide value = 0;
  std::size_t i = 0;  // 1-based
  std::size_t j = 0;  // 1-based
};

/// max over ordered pairs i != j of a_i / (a_i, a_j), with the first
/// maximising pair in row-major order. Needs at least two terms.
StatReport statistic(const GrahamSequence& a);

/// {M_n/n, ..., M_n/1}.
GrahamSequence mn_sequence(unsigned n);

/// With the nonzero elements of S written x_k/y_k and L = lcm of the x_k,
/// returns the integers L * y_k / x_k (so each fraction f maps to L / f).
/// 0 is dropped; 1 is treated like any other element.
GrahamSequence farey_to_graham(const FractionSet& s);

/// {0} ∪ {a_1 / a_k reduced : k = 1..m}.
FractionSet graham_to_farey(const GrahamSequence& a);

/// Checks, for every pair of the sequence built by farey_to_graham, that
///   (a_i, a_j)        == L / [x_i, x_j] * (y_i, y_j)
///   a_i / (a_i, a_j)  == (y_i / x_i) * [x_i, x_j] / (y_i, y_j)
/// with a_i indexed in decreasing order (increasing fraction).
bool gcd_identity_check(const FractionSet& s);

struct Conjecture1Report {
  bool holds = true;
  std::optional<GrahamSequence> counterexample;
  std::uint64_t sequences_checked = 0;
};

/// Largest C(bound, length) accepted by the bounded scans.
inline constexpr std::uint64_t kBruteForceBudget = 100'000'000;

/// Checks statistic >= length for every ascending length-subset of
/// {1..bound}. Valid only within the bound.
Conjecture1Report brute_force_conjecture1(unsigned length, unsigned bound);

/// Every ascending length-subset of {1..bound} with overall gcd 1 and
/// statistic exactly `length`, in lexicographic order.
std::vector<GrahamSequence> brute_force_conjecture2(unsigned length, unsigned bound);

}  // namespace fg
