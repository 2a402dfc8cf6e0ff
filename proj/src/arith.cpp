#include "fg/arith.hpp"

#include <algorithm>
#include <limits>

namespace fg {

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ResourceError("128-bit overflow in addition: " + to_string(a) + " + " + to_string(b));
  }
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ResourceError("128-bit overflow in multiplication: " + to_string(a) + " * " + to_string(b));
  }
  return r;
}

Wide lcm(Wide a, Wide b) {
  if (a == 0 || b == 0) {
    throw DomainError("lcm requires positive arguments");
  }
  return checked_mul(a / gcd(a, b), b);
}

Wide lcm_upto(unsigned n) {
  if (n == 0) {
    throw DomainError("lcm_upto requires n >= 1");
  }
  Wide m = 1;
  for (unsigned k = 2; k <= n; ++k) {
    try {
      m = lcm(m, k);
    } catch (const ResourceError&) {
      throw ResourceError("M_n overflows 128 bits at n = " + std::to_string(n));
    }
  }
  return m;
}

std::uint64_t totient(std::uint64_t k) {
  if (k == 0) {
    throw DomainError("totient requires k >= 1");
  }
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Wide parse_wide(std::string_view text) {
  if (text.empty() || text.size() > 39) {
    throw DomainError("expected 1 to 39 decimal digits, got '" + std::string(text) + "'");
  }
  Wide v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw DomainError("not a non-negative decimal integer: '" + std::string(text) + "'");
    }
    Wide next;
    if (__builtin_mul_overflow(v, Wide{10}, &next) ||
        __builtin_add_overflow(next, static_cast<Wide>(c - '0'), &next)) {
      throw DomainError("integer out of 128-bit range: '" + std::string(text) + "'");
    }
    v = next;
  }
  return v;
}

Fraction::Fraction(Wide num, Wide den) {
  if (den == 0) {
    throw DomainError("zero denominator");
  }
  if (num == 0) {
    return;  // 0/1
  }
  Wide g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction frac_div(const Fraction& x, const Fraction& y) {
  if (y.is_zero()) {
    throw DomainError("division by zero fraction");
  }
  if (x.is_zero()) {
    return Fraction{};
  }
  Wide g_num = gcd(x.num(), y.num());
  Wide g_den = gcd(x.den(), y.den());
  Wide num = checked_mul(x.num() / g_num, y.den() / g_den);
  Wide den = checked_mul(y.num() / g_num, x.den() / g_den);
  return Fraction(Fraction::Reduced{}, num, den);
}

std::strong_ordering frac_cmp(const Fraction& x, const Fraction& y) {
  if (x.den() == y.den()) return x.num() <=> y.num();
  return checked_mul(x.num(), y.den()) <=> checked_mul(y.num(), x.den());
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) { return frac_cmp(x, y); }

std::string to_string(const Fraction& f) { return to_string(f.num()) + "/" + to_string(f.den()); }

Fraction parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Fraction(parse_wide(text), 1);
  }
  Wide num = parse_wide(text.substr(0, slash));
  Wide den = parse_wide(text.substr(slash + 1));
  if (den == 0) {
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  return Fraction(num, den);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << to_string(f); }

}  // namespace fg
