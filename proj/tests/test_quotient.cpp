#include <doctest.h>

#include <random>

#include "fg/quotient.hpp"
#include "oracles.hpp"

using namespace fg;

namespace {

FractionSet set_of(std::initializer_list<std::pair<unsigned, unsigned>> items) {
  FractionSet s;
  for (auto [a, b] : items) s.emplace(a, b);
  return s;
}

}  // namespace

TEST_CASE("quotient_set") {
  CHECK(quotient_set(set_of({{0, 1}})) == set_of({{0, 1}}));
  CHECK(quotient_set(set_of({{1, 1}})) == set_of({{1, 1}}));

  const auto s = set_of({{0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}});
  const auto expect = oracle::quotient_set(oracle::from_set(s));
  CHECK(quotient_set(s) == oracle::to_set({expect.begin(), expect.end()}));
  CHECK(quotient_set(s) == set_of({{0, 1}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}}));

  CHECK_THROWS_AS(quotient_set({}), DomainError);
}

TEST_CASE("closure_check") {
  const auto exceptional = set_of({{0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(closure_check(exceptional, 4).closed);
  CHECK_FALSE(closure_check(exceptional, 4).witness);

  // (2/5) / (3/4) = 8/15 by cross-multiplication.
  CHECK(oracle::divide({2, 5}, {3, 4}) == oracle::Frac{8, 15});
  const auto r = closure_check(set_of({{2, 5}, {3, 4}}), 5);
  CHECK_FALSE(r.closed);
  REQUIRE(r.witness);
  CHECK(r.witness->x == Fraction(2, 5));
  CHECK(r.witness->y == Fraction(3, 4));
  CHECK(r.witness->quotient == Fraction(8, 15));

  for (unsigned n = 1; n <= 20; ++n) CHECK(closure_check(set_of({{0, 1}, {1, 1}}), n).closed);

  CHECK_THROWS_WITH_AS(closure_check(set_of({{1, 6}, {1, 2}}), 5), doctest::Contains("1/6"), DomainError);
}

TEST_CASE("closure_check witness is the first pair in (y, x) order") {
  // Pairs failing in F_5: (1/4, 2/5)->5/8, (1/3, 2/5)->5/6, (1/4, 3/5)->5/12, ...
  const auto s = set_of({{1, 4}, {1, 3}, {2, 5}, {3, 5}});
  const auto r = closure_check(s, 5);
  REQUIRE(r.witness);
  CHECK(r.witness->y == Fraction(2, 5));
  CHECK(r.witness->x == Fraction(1, 4));
  CHECK(r.witness->quotient == Fraction(5, 8));
}

TEST_CASE("coverage_check") {
  const auto r = coverage_check(unit_fraction_set(5), 5);
  CHECK(r.covers);
  CHECK(r.missing.empty());
  CHECK(r.extraneous.empty());

  const auto e = coverage_check(set_of({{0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}}), 4);
  CHECK_FALSE(e.covers);
  CHECK(e.missing == std::vector<Fraction>{Fraction(1, 4)});
  CHECK(e.extraneous.empty());

  const auto z = coverage_check(set_of({{0, 1}}), 1);
  CHECK_FALSE(z.covers);
  CHECK(z.missing == std::vector<Fraction>{Fraction(1, 1)});

  const auto x = coverage_check(set_of({{1, 4}, {2, 3}, {1, 1}}), 4);
  CHECK_FALSE(x.covers);
  CHECK(x.extraneous == std::vector<Fraction>{Fraction(3, 8)});

  for (unsigned n = 1; n <= 30; ++n) {
    CHECK(coverage_check(unit_fraction_set(n), n).covers);
    CHECK(coverage_check(same_denominator_set(n), n).covers);
  }
}

TEST_CASE("compat_graph") {
  const CompatGraph g1(1);
  REQUIRE(g1.size() == 2);
  CHECK(g1.adjacent(0, 1));

  const CompatGraph g4(4);
  auto idx = [&](unsigned a, unsigned b) { return *g4.index_of(Fraction(a, b)); };
  CHECK_FALSE(g4.index_of(Fraction(2, 5)));
  CHECK(g4.adjacent(idx(1, 3), idx(1, 2)));
  CHECK(g4.adjacent(idx(1, 4), idx(1, 3)));
  CHECK_FALSE(g4.adjacent(idx(1, 4), idx(2, 3)));

  for (unsigned n = 1; n <= 30; ++n) {
    const CompatGraph g(n);
    const auto zero = *g.index_of(Fraction(0, 1));
    const auto one = *g.index_of(Fraction(1, 1));
    CHECK(g.degree(zero) == g.size() - 1);
    CHECK(g.degree(one) == g.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK_FALSE(g.adjacent(i, i));
      for (std::size_t j = 0; j < g.size(); ++j) REQUIRE(g.adjacent(i, j) == g.adjacent(j, i));
    }
  }
}

TEST_CASE("edges agree with the quotient oracle") {
  for (unsigned n = 1; n <= 12; ++n) {
    const CompatGraph g(n);
    const auto fn = oracle::farey(n);
    for (std::size_t i = 0; i < fn.size(); ++i) {
      for (std::size_t j = i + 1; j < fn.size(); ++j) {
        const bool expect = oracle::in_farey(oracle::divide(fn[i], fn[j]), n);
        REQUIRE(g.adjacent(i, j) == expect);
      }
    }
  }
}

TEST_CASE("closure, clique and direct quotient agree on random subsets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const unsigned n = 1 + rng() % 8;
    const CompatGraph g(n);
    std::vector<std::size_t> idx(g.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(1 + rng() % std::min<std::size_t>(12, g.size()));

    bool clique = true;
    for (auto a : idx)
      for (auto b : idx)
        if (a != b && !g.adjacent(a, b)) clique = false;

    const FractionSet s = g.to_fractions(idx);
    const bool direct = oracle::closed(oracle::from_set(s), n);
    REQUIRE(closure_check(s, n).closed == clique);
    REQUIRE(clique == direct);

    FractionSet q = quotient_set(s);
    bool nonzero = std::any_of(s.begin(), s.end(), [](const Fraction& f) { return !f.is_zero(); });
    CHECK(q.count(Fraction(1, 1)) == (nonzero ? 1u : 0u));
    const bool zero_expected = s.count(Fraction()) == 1;
    CHECK(q.count(Fraction()) == (zero_expected ? 1u : 0u));

    // Monotonicity under adding one more element.
    FractionSet t = s;
    t.insert(g.vertex(rng() % g.size()));
    const FractionSet qt = quotient_set(t);
    CHECK(std::includes(qt.begin(), qt.end(), q.begin(), q.end()));
  }
}
