#include "fg/farey.hpp"

namespace fg {

namespace {

void require_order(unsigned n) {
  if (n == 0) throw DomainError("Farey order must be >= 1");
}

}  // namespace

FareySequence farey_sequence(unsigned n) {
  require_order(n);
  FareySequence seq{n, {}};
  seq.elements.reserve(farey_size(n));

  std::uint64_t p = 0, q = 1, r = 1, s = n;
  seq.elements.emplace_back(p, q);
  while (r <= n) {
    seq.elements.emplace_back(r, s);
    if (r == s) break;
    std::uint64_t k = (n + q) / s;
    std::uint64_t next_r = k * r - p;
    std::uint64_t next_s = k * s - q;
    p = r;
    q = s;
    r = next_r;
    s = next_s;
  }
  return seq;
}

std::uint64_t farey_size(unsigned n) {
  require_order(n);
  std::uint64_t total = 1;
  for (unsigned k = 1; k <= n; ++k) total += totient(k);
  return total;
}

bool is_member(const Fraction& f, unsigned n) { return f.num() <= f.den() && f.den() <= n; }

FractionSet unit_fraction_set(unsigned n) {
  require_order(n);
  FractionSet s{Fraction(0, 1), Fraction(1, 1)};
  for (unsigned k = 2; k <= n; ++k) s.emplace(1, k);
  return s;
}

FractionSet same_denominator_set(unsigned n) {
  require_order(n);
  FractionSet s{Fraction(0, 1), Fraction(1, 1)};
  for (unsigned k = 1; k < n; ++k) s.emplace(k, n);
  return s;
}

FractionSet to_set(const FareySequence& seq) { return {seq.elements.begin(), seq.elements.end()}; }

}  // namespace fg
