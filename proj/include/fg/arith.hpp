#pragma once

/**
 * @file arith.hpp
 * @brief Exact non-negative integer and reduced-fraction arithmetic.
 *
 * All integers are 128-bit unsigned. Every operation that could exceed the
 * width checks for it and throws ResourceError instead of wrapping.
 *
 * Fractions are always stored in lowest terms with a positive denominator,
 * and zero is uniquely 0/1. Values above 1 are representable; membership in
 * [0, 1] is a Farey-level concern.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fg {

using Wide = unsigned __int128;

/// Input outside an operation's domain (zero denominator, bad set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Overflow, exhausted search budget, or I/O failure.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Wide checked_add(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);

/// Greatest common divisor; gcd(a, 0) = a and gcd(0, 0) = 0.
constexpr Wide gcd(Wide a, Wide b) noexcept {
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Least common multiple of two positive integers, (a / (a,b)) * b.
Wide lcm(Wide a, Wide b);

/// M_n = lcm(1, 2, ..., n). Throws ResourceError naming n on overflow.
Wide lcm_upto(unsigned n);

/// Euler's phi by trial factorization.
std::uint64_t totient(std::uint64_t k);

std::string to_string(Wide v);

/// Parses a decimal string of at most 39 digits. Throws DomainError.
Wide parse_wide(std::string_view text);

class Fraction {
 public:
  /// 0/1.
  constexpr Fraction() noexcept = default;

  /// Reduces num/den to lowest terms. Throws DomainError when den == 0.
  Fraction(Wide num, Wide den);

  constexpr Wide num() const noexcept { return num_; }
  constexpr Wide den() const noexcept { return den_; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }

  /// Structural equality; equivalent to value equality for reduced forms.
  friend constexpr bool operator==(const Fraction&, const Fraction&) noexcept = default;

  /// Total order by value.
  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y);

 private:
  struct Reduced {};
  constexpr Fraction(Reduced, Wide num, Wide den) noexcept : num_(num), den_(den) {}

  friend Fraction frac_div(const Fraction& x, const Fraction& y);

  Wide num_ = 0;
  Wide den_ = 1;
};

/// reduce(num, den) == Fraction(num, den); spelled out for call sites that
/// want the operation name.
inline Fraction reduce(Wide num, Wide den) { return Fraction(num, den); }

/// x / y in lowest terms.
///
/// With x = a/b and y = c/d already reduced, the quotient a*d / (b*c) is
/// assembled as (a/(a,c) * d/(b,d)) / (c/(a,c) * b/(b,d)), which is already in
/// lowest terms, so the full cross product is never formed and reduced.
Fraction frac_div(const Fraction& x, const Fraction& y);

/// Orders by value using checked cross-multiplication.
std::strong_ordering frac_cmp(const Fraction& x, const Fraction& y);

/// "num/den", e.g. "0/1", "2/3".
std::string to_string(const Fraction& f);

/// Parses "p/q" or a bare integer "k" (= k/1); reduces. Throws DomainError.
Fraction parse_fraction(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace fg

template <>
struct std::hash<fg::Fraction> {
  std::size_t operator()(const fg::Fraction& f) const noexcept {
    auto lo = [](fg::Wide v) { return static_cast<std::uint64_t>(v) ^ static_cast<std::uint64_t>(v >> 64); };
    return std::hash<std::uint64_t>{}(lo(f.num()) * 0x9E3779B97F4A7C15ull ^ lo(f.den()));
  }
};
