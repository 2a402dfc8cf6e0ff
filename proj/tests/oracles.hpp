#pragma once

// Brute-force reference computations for tests. Deliberately independent of
// the library: plain 64-bit integers, std::gcd, cross-multiply-then-reduce.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "fg/arith.hpp"
#include "fg/farey.hpp"

namespace oracle {

using Frac = std::pair<std::uint64_t, std::uint64_t>;  // reduced (num, den)

inline Frac reduced(std::uint64_t num, std::uint64_t den) {
  if (num == 0) return {0, 1};
  auto g = std::gcd(num, den);
  return {num / g, den / g};
}

struct ValueLess {
  bool operator()(const Frac& a, const Frac& b) const { return a.first * b.second < b.first * a.second; }
};

using FracSet = std::set<Frac, ValueLess>;

inline Frac divide(const Frac& x, const Frac& y) { return reduced(x.first * y.second, x.second * y.first); }

inline bool in_farey(const Frac& f, std::uint64_t n) { return f.first <= f.second && f.second <= n; }

/// Double loop over 0 <= a <= b <= n keeping reduced pairs, sorted by value.
inline std::vector<Frac> farey(std::uint64_t n) {
  FracSet s;
  for (std::uint64_t b = 1; b <= n; ++b) {
    for (std::uint64_t a = 0; a <= b; ++a) {
      if (std::gcd(a, b) == 1 || (a == 0 && b == 1)) s.insert({a, b});
    }
  }
  return {s.begin(), s.end()};
}

/// Q(S) by enumerating every ordered pair and reducing the cross product.
inline FracSet quotient_set(const std::vector<Frac>& s) {
  if (s.size() == 1 && s[0].first == 0) return {{0, 1}};
  FracSet q;
  for (const auto& x : s) {
    for (const auto& y : s) {
      if (y.first == 0) continue;
      if (x.first * y.second <= y.first * x.second) q.insert(divide(x, y));
    }
  }
  return q;
}

inline bool closed(const std::vector<Frac>& s, std::uint64_t n) {
  for (const auto& f : quotient_set(s)) {
    if (!in_farey(f, n)) return false;
  }
  return true;
}

inline std::uint64_t totient(std::uint64_t k) {
  std::uint64_t c = 0;
  for (std::uint64_t j = 1; j <= k; ++j) c += std::gcd(j, k) == 1;
  return c;
}

inline std::uint64_t lcm_fold(std::uint64_t n) {
  std::uint64_t m = 1;
  for (std::uint64_t k = 1; k <= n; ++k) m = std::lcm(m, k);
  return m;
}

/// max over ordered pairs i != j of a_i / gcd(a_i, a_j).
inline std::uint64_t statistic(const std::vector<std::uint64_t>& a) {
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) best = std::max(best, a[i] / std::gcd(a[i], a[j]));
    }
  }
  return best;
}

/// All subsets of F_n (as index masks) that are closed and of largest size.
inline std::vector<std::vector<Frac>> maximum_closed_subsets(std::uint64_t n) {
  const auto fn = farey(n);
  std::vector<std::vector<Frac>> best;
  std::size_t best_size = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << fn.size()); ++mask) {
    std::vector<Frac> s;
    for (std::size_t i = 0; i < fn.size(); ++i) {
      if (mask >> i & 1) s.push_back(fn[i]);
    }
    if (s.size() < best_size || !closed(s, n)) continue;
    if (s.size() > best_size) {
      best_size = s.size();
      best.clear();
    }
    best.push_back(s);
  }
  return best;
}

inline fg::Fraction to_fraction(const Frac& f) { return fg::Fraction(f.first, f.second); }

inline fg::FractionSet to_set(const std::vector<Frac>& v) {
  fg::FractionSet s;
  for (const auto& f : v) s.insert(to_fraction(f));
  return s;
}

inline std::vector<Frac> from_set(const fg::FractionSet& s) {
  std::vector<Frac> v;
  for (const auto& f : s) v.push_back({static_cast<std::uint64_t>(f.num()), static_cast<std::uint64_t>(f.den())});
  return v;
}

}  // namespace oracle
