#include "fg/quotient.hpp"

#include <algorithm>
#include <iterator>

namespace fg {

FractionSet quotient_set(const FractionSet& s) {
  if (s.empty()) {
    throw DomainError("quotient set of an empty set");
  }
  if (s.size() == 1 && s.begin()->is_zero()) {
    return {Fraction{}};
  }
  FractionSet q;
  for (auto y = s.begin(); y != s.end(); ++y) {
    if (y->is_zero()) continue;
    for (auto x = s.begin(); x != std::next(y); ++x) {
      q.insert(frac_div(*x, *y));
    }
  }
  return q;
}

void require_subset_of_farey(const FractionSet& s, unsigned n) {
  if (n == 0) throw DomainError("Farey order must be >= 1");
  std::string bad;
  for (const auto& f : s) {
    if (!is_member(f, n)) {
      if (!bad.empty()) bad += ", ";
      bad += to_string(f);
    }
  }
  if (!bad.empty()) {
    throw DomainError("set is not a subset of F_" + std::to_string(n) + ": " + bad);
  }
}

ClosureReport closure_check(const FractionSet& s, unsigned n) {
  require_subset_of_farey(s, n);
  for (auto y = s.begin(); y != s.end(); ++y) {
    if (y->is_zero()) continue;
    for (auto x = s.begin(); x != y; ++x) {
      Fraction q = frac_div(*x, *y);
      if (!is_member(q, n)) {
        return {false, QuotientWitness{*x, *y, q}};
      }
    }
  }
  return {};
}

CoverageReport coverage_check(const FractionSet& s, unsigned n) {
  require_subset_of_farey(s, n);
  FractionSet q = quotient_set(s);
  FareySequence fn = farey_sequence(n);

  CoverageReport report;
  std::set_difference(fn.elements.begin(), fn.elements.end(), q.begin(), q.end(),
                      std::back_inserter(report.missing));
  for (const auto& f : q) {
    if (!is_member(f, n)) report.extraneous.push_back(f);
  }
  report.covers = report.missing.empty() && report.extraneous.empty();
  return report;
}

CompatGraph::CompatGraph(unsigned n) : order_(n), vertices_(farey_sequence(n).elements) {
  const std::size_t v = vertices_.size();
  adjacency_.assign(v, Row(v));
  // vertices_ ascending, so for i < j the quotient is vertices_[i] / vertices_[j].
  for (std::size_t j = 1; j < v; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (is_member(frac_div(vertices_[i], vertices_[j]), n)) {
        adjacency_[i].set(j);
        adjacency_[j].set(i);
      }
    }
  }
}

std::optional<std::size_t> CompatGraph::index_of(const Fraction& f) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), f);
  if (it == vertices_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

FractionSet CompatGraph::to_fractions(const Row& members) const {
  FractionSet s;
  for (auto i = members.find_first(); i != Row::npos; i = members.find_next(i)) {
    s.insert(vertices_[i]);
  }
  return s;
}

FractionSet CompatGraph::to_fractions(const std::vector<std::size_t>& members) const {
  FractionSet s;
  for (auto i : members) s.insert(vertices_.at(i));
  return s;
}

}  // namespace fg
