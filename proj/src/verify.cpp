#include "fg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace fg {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::vector<FractionSet> canonical(std::vector<FractionSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::vector<FractionSet> canonical_families(unsigned n) {
  return canonical({unit_fraction_set(n), same_denominator_set(n)});
}

// Runs the clique search; on budget exhaustion fills the certificate from
// the partial result and returns false.
bool run_search(const CompatGraph& g, const SearchOptions& options, Certificate& cert, SearchResult& out) {
  try {
    out = max_cliques(g, options);
  } catch (const BudgetExceeded& e) {
    cert.status = Status::ResourceExhausted;
    cert.found_sets = e.best_so_far().cliques;
    cert.max_subset_size = e.best_so_far().max_size;
    cert.nodes_explored = e.best_so_far().nodes_explored;
    return false;
  }
  cert.max_subset_size = out.max_size;
  cert.nodes_explored = out.nodes_explored;
  return true;
}

}  // namespace

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
    case Theorem::Equiv: return "EQUIV";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::ResourceExhausted: return "resource_exhausted";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  for (auto t : {Theorem::T1, Theorem::T3, Theorem::T4, Theorem::Equiv}) {
    if (to_string(t) == text) return t;
  }
  throw DomainError("unknown theorem id '" + std::string(text) + "'");
}

Status parse_status(std::string_view text) {
  for (auto s : {Status::Verified, Status::Refuted, Status::ResourceExhausted}) {
    if (to_string(s) == text) return s;
  }
  throw DomainError("unknown status '" + std::string(text) + "'");
}

bool canonical_equal(const Certificate& a, const Certificate& b) {
  return a.schema_version == b.schema_version && a.theorem == b.theorem && a.n == b.n && a.status == b.status &&
         a.expected_sets == b.expected_sets && a.found_sets == b.found_sets &&
         a.max_subset_size == b.max_subset_size && a.nodes_explored == b.nodes_explored;
}

Discrepancy discrepancies(const Certificate& cert) {
  const auto expected = canonical(cert.expected_sets);
  const auto found = canonical(cert.found_sets);
  Discrepancy d;
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(), std::back_inserter(d.missing));
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                      std::back_inserter(d.unexpected));
  return d;
}

Status assess(const Certificate& cert) {
  if (cert.status == Status::ResourceExhausted) return cert.status;
  const Discrepancy d = discrepancies(cert);
  bool ok = false;
  switch (cert.theorem) {
    case Theorem::T1:
      ok = cert.max_subset_size == cert.n + 1 && d.missing.empty();
      break;
    case Theorem::T3:
    case Theorem::Equiv:
      ok = d.missing.empty() && d.unexpected.empty();
      break;
    case Theorem::T4:
      ok = d.missing.empty() && d.unexpected.empty() && cert.max_subset_size == cert.n + 1;
      break;
  }
  return ok ? Status::Verified : Status::Refuted;
}

FractionSet exceptional_set_n4() {
  return {Fraction(0, 1), Fraction(1, 1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)};
}

std::vector<FractionSet> theorem4_expected_sets(unsigned n) {
  auto expected = canonical_families(n);
  if (n == 4) expected.push_back(exceptional_set_n4());
  return canonical(std::move(expected));
}

Certificate verify_theorem1(unsigned n, const SearchOptions& options) {
  const auto start = Clock::now();
  Certificate cert;
  cert.theorem = Theorem::T1;
  cert.n = n;
  cert.expected_sets = {unit_fraction_set(n)};

  const CompatGraph g(n);
  SearchResult r;
  if (run_search(g, options, cert, r)) {
    cert.found_sets = r.cliques;
    cert.status = assess(cert);
  }
  cert.elapsed_ms = ms_since(start);
  return cert;
}

Certificate verify_theorem3(unsigned n, const SearchOptions& options) {
  const auto start = Clock::now();
  Certificate cert;
  cert.theorem = Theorem::T3;
  cert.n = n;
  cert.expected_sets = canonical_families(n);

  const CompatGraph g(n);
  SearchResult r;
  if (!run_search(g, options, cert, r)) {
    cert.found_sets.clear();
    cert.elapsed_ms = ms_since(start);
    return cert;
  }

  std::vector<FractionSet> covering;
  for (const auto& c : r.cliques) {
    if (coverage_check(c, n).covers) covering.push_back(c);
  }

  // Any covering closed set lies inside a maximal clique, which then also
  // covers; a covering proper subset of it would leave some T \ {v} covering.
  std::vector<FractionSet> maximal;
  try {
    maximal = all_maximal_closed_sets(g, 1, options.budget);
  } catch (const BudgetExceeded&) {
    cert.status = Status::ResourceExhausted;
    cert.found_sets = canonical(covering);
    cert.elapsed_ms = ms_since(start);
    return cert;
  }
  for (const auto& t : maximal) {
    if (!coverage_check(t, n).covers) continue;
    covering.push_back(t);
    for (const auto& v : t) {
      FractionSet smaller = t;
      smaller.erase(v);
      if (coverage_check(smaller, n).covers) covering.push_back(std::move(smaller));
    }
  }

  cert.found_sets = canonical(std::move(covering));
  cert.status = assess(cert);
  cert.elapsed_ms = ms_since(start);
  return cert;
}

Certificate verify_theorem4(unsigned n, const SearchOptions& options) {
  const auto start = Clock::now();
  Certificate cert;
  cert.theorem = Theorem::T4;
  cert.n = n;
  cert.expected_sets = theorem4_expected_sets(n);

  const CompatGraph g(n);
  SearchResult r;
  if (run_search(g, options, cert, r)) {
    cert.found_sets = r.cliques;
    cert.status = assess(cert);
  }
  cert.elapsed_ms = ms_since(start);
  return cert;
}

bool check_closed_to_statistic(const FractionSet& s, unsigned n) {
  if (!closure_check(s, n).closed) return false;
  return statistic(farey_to_graham(s)).value <= n;
}

bool check_statistic_to_closed(const GrahamSequence& a, unsigned n) {
  if (a.size() >= 2 && statistic(a).value > n) return false;
  const FractionSet s = graham_to_farey(a);
  for (const auto& f : s) {
    if (!is_member(f, n)) return false;
  }
  return closure_check(s, n).closed;
}

namespace {

std::vector<Wide> divisors(Wide m) {
  std::vector<Wide> d;
  for (Wide k = 1; k * k <= m; ++k) {
    if (m % k == 0) {
      d.push_back(k);
      if (k * k != m) d.push_back(m / k);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

template <typename T>
std::vector<T> random_subset(const std::vector<T>& pool, std::size_t size, std::mt19937_64& rng) {
  std::vector<T> out;
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), size, rng);
  return out;
}

// Random clique of g with at least two nonzero members: a random vertex
// order filtered greedily, each compatible vertex kept with probability 1/2.
FractionSet random_clique(const CompatGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::bernoulli_distribution keep(0.5);
  while (true) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> members;
    for (auto v : order) {
      if (!keep(rng)) continue;
      if (std::all_of(members.begin(), members.end(), [&](std::size_t u) { return g.adjacent(u, v); })) {
        members.push_back(v);
      }
    }
    FractionSet s = g.to_fractions(members);
    if (std::count_if(s.begin(), s.end(), [](const Fraction& f) { return !f.is_zero(); }) >= 2) return s;
  }
}

GrahamSequence random_small_statistic_sequence(unsigned n, const std::vector<Wide>& divs, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> length_dist(2, std::min<std::size_t>(n, divs.size()));
  std::uniform_int_distribution<int> kind(0, 2);
  const std::size_t length = length_dist(rng);
  const Wide m = lcm_upto(n);

  switch (kind(rng)) {
    case 0: {
      std::vector<Wide> family;
      for (unsigned k = 1; k <= n; ++k) family.push_back(m / k);
      return GrahamSequence(random_subset(family, length, rng));
    }
    case 1: {
      std::vector<Wide> family;
      for (unsigned k = 1; k <= n; ++k) family.push_back(k);
      return GrahamSequence(random_subset(family, length, rng));
    }
    default:
      for (int attempt = 0; attempt < 200; ++attempt) {
        GrahamSequence a(random_subset(divs, length, rng));
        if (statistic(a).value <= n) return a;
      }
      return GrahamSequence({m / 2, m});  // statistic 2
  }
}

}  // namespace

EquivalenceReport cross_check_equivalence(unsigned n, std::size_t samples, std::uint64_t seed) {
  if (n == 0) throw DomainError("Farey order must be >= 1");
  EquivalenceReport report;
  report.n = n;
  std::mt19937_64 rng(seed);

  auto record = [&](bool ok, std::size_t& passed, std::size_t& failed, const FractionSet& s) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      report.failures.push_back(s);
    }
  };

  // n = 1: every closed set has a single nonzero element, so the statistic
  // side is undefined and only the sequence-to-set direction applies.
  if (n >= 2) {
    const CompatGraph g(n);
    std::vector<FractionSet> instances = max_cliques(g).cliques;
    while (instances.size() < samples) instances.push_back(random_clique(g, rng));
    for (const auto& s : instances) {
      record(check_closed_to_statistic(s, n), report.closed_to_statistic_passed, report.closed_to_statistic_failed,
             s);
    }
  }

  const std::vector<Wide> divs = divisors(lcm_upto(n));
  std::uniform_int_distribution<unsigned> scale(1, 1000);
  for (std::size_t k = 0; k < samples; ++k) {
    GrahamSequence a = n >= 2 ? random_small_statistic_sequence(n, divs, rng) : GrahamSequence({Wide{1}});
    a = a.scaled(scale(rng));
    record(check_statistic_to_closed(a, n), report.statistic_to_closed_passed, report.statistic_to_closed_failed,
           graham_to_farey(a));
  }
  report.failures = canonical(std::move(report.failures));
  return report;
}

Certificate equivalence_certificate(unsigned n, std::size_t samples, std::uint64_t seed) {
  const auto start = Clock::now();
  const EquivalenceReport report = cross_check_equivalence(n, samples, seed);
  Certificate cert;
  cert.theorem = Theorem::Equiv;
  cert.n = n;
  cert.found_sets = report.failures;
  cert.max_subset_size = n + 1;
  cert.nodes_explored = report.closed_to_statistic_passed + report.closed_to_statistic_failed +
                        report.statistic_to_closed_passed + report.statistic_to_closed_failed;
  cert.status = assess(cert);
  cert.elapsed_ms = ms_since(start);
  return cert;
}

}  // namespace fg
