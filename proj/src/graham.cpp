#include "fg/graham.hpp"

#include <algorithm>
#include <numeric>

namespace fg {

GrahamSequence::GrahamSequence(std::vector<Wide> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  if (!terms_.empty() && terms_.front() == 0) {
    throw DomainError("Graham sequence terms must be positive");
  }
  if (std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end()) {
    throw DomainError("Graham sequence terms must be distinct");
  }
}

GrahamSequence GrahamSequence::scaled(Wide c) const {
  if (c == 0) throw DomainError("scale factor must be positive");
  std::vector<Wide> out;
  out.reserve(terms_.size());
  for (Wide t : terms_) out.push_back(checked_mul(t, c));
  return GrahamSequence(std::move(out));
}

std::string to_string(const GrahamSequence& a) {
  std::string s;
  for (Wide t : a.terms()) {
    if (!s.empty()) s += ",";
    s += to_string(t);
  }
  return s;
}

StatReport statistic(const GrahamSequence& a) {
  if (a.size() < 2) {
    throw DomainError("Graham statistic needs at least two terms");
  }
  StatReport best;
  const auto& t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i == j) continue;
      Wide v = t[i] / gcd(t[i], t[j]);
      if (v > best.value) best = {v, i + 1, j + 1};
    }
  }
  return best;
}

GrahamSequence mn_sequence(unsigned n) {
  Wide m = lcm_upto(n);
  std::vector<Wide> terms;
  for (unsigned k = 1; k <= n; ++k) terms.push_back(m / k);
  return GrahamSequence(std::move(terms));
}

GrahamSequence farey_to_graham(const FractionSet& s) {
  Wide l = 1;
  bool any = false;
  for (const auto& f : s) {
    if (f.is_zero()) continue;
    l = lcm(l, f.num());
    any = true;
  }
  if (!any) {
    throw DomainError("farey_to_graham needs a nonzero element");
  }
  std::vector<Wide> terms;
  for (const auto& f : s) {
    if (!f.is_zero()) terms.push_back(checked_mul(l / f.num(), f.den()));
  }
  return GrahamSequence(std::move(terms));
}

FractionSet graham_to_farey(const GrahamSequence& a) {
  if (a.size() == 0) {
    throw DomainError("graham_to_farey needs at least one term");
  }
  FractionSet s{Fraction{}};
  for (Wide t : a.terms()) s.insert(reduce(a[0], t));
  return s;
}

bool gcd_identity_check(const FractionSet& s) {
  const GrahamSequence seq = farey_to_graham(s);

  std::vector<Fraction> xy;  // ascending fractions <-> descending a
  for (const auto& f : s) {
    if (!f.is_zero()) xy.push_back(f);
  }
  Wide l = 1;
  for (const auto& f : xy) l = lcm(l, f.num());

  const std::size_t m = xy.size();
  auto a = [&](std::size_t k) { return seq[m - 1 - k]; };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Wide xi = xy[i].num(), yi = xy[i].den();
      const Wide xj = xy[j].num(), yj = xy[j].den();
      const Wide g = gcd(a(i), a(j));
      const Wide lx = lcm(xi, xj);
      const Wide gy = gcd(yi, yj);

      if (a(i) != checked_mul(l / xi, yi)) return false;
      if (l % lx != 0 || g != checked_mul(l / lx, gy)) return false;
      if (Fraction(a(i) / g, 1) != Fraction(checked_mul(yi, lx), checked_mul(xi, gy))) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t binomial_capped(unsigned n, unsigned k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t stat_u64(std::span<const std::uint64_t> t) {
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i != j) best = std::max(best, t[i] / std::gcd(t[i], t[j]));
    }
  }
  return best;
}

void check_scan(unsigned length, unsigned bound) {
  if (length < 2) {
    throw DomainError("bounded scans need length >= 2 (the statistic needs two terms)");
  }
  if (bound < length) {
    throw DomainError("bound must be at least the sequence length");
  }
  if (binomial_capped(bound, length, kBruteForceBudget) > kBruteForceBudget) {
    throw ResourceError("C(" + std::to_string(bound) + ", " + std::to_string(length) +
                        ") exceeds the scan budget of " + std::to_string(kBruteForceBudget));
  }
}

// Visits every ascending length-subset of {1..bound} in lexicographic
// order; stops early when visit returns false.
template <typename Visit>
void for_each_subset(unsigned length, unsigned bound, Visit&& visit) {
  std::vector<std::uint64_t> t(length);
  std::iota(t.begin(), t.end(), std::uint64_t{1});
  while (true) {
    if (!visit(std::span<const std::uint64_t>(t))) return;
    std::size_t i = length;
    while (i-- > 0) {
      if (t[i] < bound - (length - 1 - i)) break;
      if (i == 0) return;
    }
    ++t[i];
    for (std::size_t k = i + 1; k < length; ++k) t[k] = t[k - 1] + 1;
  }
}

GrahamSequence to_sequence(std::span<const std::uint64_t> t) { return GrahamSequence({t.begin(), t.end()}); }

}  // namespace

Conjecture1Report brute_force_conjecture1(unsigned length, unsigned bound) {
  check_scan(length, bound);
  Conjecture1Report report;
  for_each_subset(length, bound, [&](std::span<const std::uint64_t> t) {
    ++report.sequences_checked;
    if (stat_u64(t) < length) {
      report.holds = false;
      report.counterexample = to_sequence(t);
      return false;
    }
    return true;
  });
  return report;
}

std::vector<GrahamSequence> brute_force_conjecture2(unsigned length, unsigned bound) {
  check_scan(length, bound);
  std::vector<GrahamSequence> found;
  for_each_subset(length, bound, [&](std::span<const std::uint64_t> t) {
    std::uint64_t g = 0;
    for (auto v : t) g = std::gcd(g, v);
    if (g == 1 && stat_u64(t) == length) found.push_back(to_sequence(t));
    return true;
  });
  return found;
}

}  // namespace fg
