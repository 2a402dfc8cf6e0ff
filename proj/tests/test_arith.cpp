#include <doctest.h>

#include <limits>
#include <random>

#include "fg/arith.hpp"
#include "oracles.hpp"

using namespace fg;

TEST_CASE("gcd") {
  CHECK(gcd(12, 8) == 4);
  CHECK(gcd(5, 0) == 5);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(6, 4) == 2);
  CHECK(6 / gcd(6, 4) == 3);
}

TEST_CASE("lcm") {
  CHECK(lcm(4, 6) == 12);
  for (Wide k = 1; k < 50; ++k) CHECK(lcm(1, k) == k);
  CHECK_THROWS_AS(lcm(0, 3), DomainError);

  // x-values of {1/3, 1/2, 2/3}
  Wide folded = 1;
  for (Wide x : {1, 1, 2}) folded = lcm(folded, x);
  CHECK(folded == 2);

  Wide big = Wide{1} << 100;
  CHECK_THROWS_AS(lcm(big, big - 1), ResourceError);
}

TEST_CASE("gcd * lcm == a * b on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> d(1, std::numeric_limits<std::uint32_t>::max());
  for (int i = 0; i < 2000; ++i) {
    Wide a = d(rng), b = d(rng);
    CHECK(gcd(a, b) * lcm(a, b) == a * b);
  }
}

TEST_CASE("lcm_upto") {
  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(4) == 12);
  CHECK(lcm_upto(10) == 2520);
  for (unsigned n = 1; n <= 40; ++n) {
    CHECK(lcm_upto(n) == oracle::lcm_fold(n));
  }
  for (unsigned n = 2; n <= 80; ++n) {
    Wide m = lcm_upto(n);
    CHECK(m % lcm_upto(n - 1) == 0);
    for (unsigned k = 1; k <= n; ++k) CHECK(m % k == 0);
  }
  CHECK_THROWS_AS(lcm_upto(0), DomainError);
  CHECK_THROWS_WITH_AS(lcm_upto(200), doctest::Contains("n = 200"), ResourceError);
}

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(5) == 4);
  CHECK(totient(8) == oracle::totient(8));
  CHECK(totient(8) == 4);
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    std::uint64_t sum = 0;
    for (std::uint64_t d = 1; d <= k; ++d) {
      if (k % d == 0) sum += totient(d);
    }
    CHECK(sum == k);
  }
  for (std::uint64_t k = 1; k <= 300; ++k) CHECK(totient(k) == oracle::totient(k));
}

TEST_CASE("reduce") {
  CHECK(reduce(4, 8) == Fraction(1, 2));
  CHECK(reduce(4, 8).num() == 1);
  CHECK(reduce(4, 8).den() == 2);
  CHECK(reduce(0, 7).num() == 0);
  CHECK(reduce(0, 7).den() == 1);
  CHECK(to_string(reduce(6, 9)) == "2/3");
  CHECK_THROWS_AS(reduce(1, 0), DomainError);
  CHECK(Fraction{} == reduce(0, 1));
}

TEST_CASE("reduce is idempotent") {
  for (Wide b = 1; b <= 60; ++b) {
    for (Wide a = 0; a <= 2 * b; ++a) {
      Fraction f(a, b);
      CHECK(gcd(f.num(), f.den()) == 1);
      CHECK(reduce(f.num(), f.den()) == f);
    }
  }
}

TEST_CASE("frac_div examples") {
  // (1/3)/(1/2) = (1*2)/(3*1)
  CHECK(oracle::divide({1, 3}, {1, 2}) == oracle::Frac{2, 3});
  CHECK(frac_div(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 3));
  CHECK(oracle::divide({1, 2}, {2, 3}) == oracle::Frac{3, 4});
  CHECK(frac_div(Fraction(1, 2), Fraction(2, 3)) == Fraction(3, 4));
  CHECK(frac_div(Fraction(0, 1), Fraction(2, 3)) == Fraction(0, 1));
  CHECK(frac_div(Fraction(5, 7), Fraction(5, 7)) == Fraction(1, 1));
  CHECK_THROWS_AS(frac_div(Fraction(1, 2), Fraction(0, 1)), DomainError);
}

TEST_CASE("frac_div agrees with naive cross-multiplication") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> d(0, 5000);
  for (int i = 0; i < 20000; ++i) {
    oracle::Frac x = oracle::reduced(d(rng), d(rng) + 1);
    oracle::Frac y = oracle::reduced(d(rng) + 1, d(rng) + 1);
    Fraction q = frac_div(oracle::to_fraction(x), oracle::to_fraction(y));
    auto expect = oracle::divide(x, y);
    REQUIRE(q.num() == expect.first);
    REQUIRE(q.den() == expect.second);
  }
}

TEST_CASE("frac_div overflow is reported") {
  Wide big = (Wide{1} << 70) + 1;
  Fraction x(big, 1);
  Fraction y(1, big + 2);
  CHECK_THROWS_AS(frac_div(x, y), ResourceError);
}

TEST_CASE("frac_cmp") {
  CHECK(frac_cmp(Fraction(1, 3), Fraction(2, 5)) == std::strong_ordering::less);
  CHECK(frac_cmp(Fraction(1, 2), Fraction(1, 2)) == std::strong_ordering::equal);
  CHECK(frac_cmp(Fraction(3, 4), Fraction(2, 3)) == std::strong_ordering::greater);
  CHECK(Fraction(1, 3) < Fraction(2, 5));

  Wide big = Wide{1} << 100;
  CHECK_THROWS_AS(frac_cmp(Fraction(big, big - 1), Fraction(big - 3, big + 1)), ResourceError);
}

TEST_CASE("text form") {
  CHECK(to_string(Wide{0}) == "0");
  CHECK(to_string(~Wide{0}) == "340282366920938463463374607431768211455");
  CHECK(parse_wide("340282366920938463463374607431768211455") == ~Wide{0});
  CHECK_THROWS_AS(parse_wide("340282366920938463463374607431768211456"), DomainError);
  CHECK_THROWS_AS(parse_wide("1234567890123456789012345678901234567890"), DomainError);
  CHECK_THROWS_AS(parse_wide(""), DomainError);
  CHECK_THROWS_AS(parse_wide("-1"), DomainError);
  CHECK_THROWS_AS(parse_wide(" 1"), DomainError);

  CHECK(parse_fraction("2/4") == Fraction(1, 2));
  CHECK(parse_fraction("7") == Fraction(7, 1));
  CHECK(to_string(parse_fraction("0/9")) == "0/1");
  CHECK_THROWS_AS(parse_fraction("1/0"), DomainError);
  CHECK_THROWS_AS(parse_fraction("1/"), DomainError);
  CHECK_THROWS_AS(parse_fraction("a/2"), DomainError);
}
