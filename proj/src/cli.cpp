#include "fg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

namespace fg::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    tokens.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return tokens;
}

}  // namespace

FractionSet parse_fraction_list(std::string_view text) {
  FractionSet s;
  for (auto token : split_commas(text)) {
    try {
      s.insert(parse_fraction(token));
    } catch (const DomainError& e) {
      throw UsageError("bad fraction '" + std::string(token) + "': " + e.what());
    }
  }
  return s;
}

std::vector<Wide> parse_terms(std::string_view text) {
  std::vector<Wide> terms;
  for (auto token : split_commas(text)) {
    try {
      terms.push_back(parse_wide(token));
    } catch (const DomainError& e) {
      throw UsageError("bad term '" + std::string(token) + "': " + e.what());
    }
    if (terms.back() == 0) throw UsageError("bad term '0': terms must be positive");
  }
  return terms;
}

std::string render_fraction_list(const FractionSet& s) {
  std::string out;
  for (const auto& f : s) {
    if (!out.empty()) out += ",";
    out += to_string(f);
  }
  return out;
}

ordered_json to_json(const FractionSet& s) {
  ordered_json a = ordered_json::array();
  for (const auto& f : s) a.push_back(to_string(f));
  return a;
}

namespace {

ordered_json sets_json(const std::vector<FractionSet>& sets) {
  ordered_json a = ordered_json::array();
  for (const auto& s : sets) a.push_back(to_json(s));
  return a;
}

ordered_json sequence_json(const GrahamSequence& a) {
  ordered_json j = ordered_json::array();
  for (Wide t : a.terms()) j.push_back(to_string(t));
  return j;
}

ordered_json fractions_json(const std::vector<Fraction>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& f : v) a.push_back(to_string(f));
  return a;
}

std::vector<FractionSet> sets_from_json(const nlohmann::json& j) {
  std::vector<FractionSet> sets;
  for (const auto& s : j) {
    FractionSet set;
    for (const auto& f : s) set.insert(parse_fraction(f.get<std::string>()));
    sets.push_back(std::move(set));
  }
  return sets;
}

}  // namespace

ordered_json to_json(const Certificate& cert) {
  ordered_json j;
  j["schema_version"] = cert.schema_version;
  j["theorem"] = std::string(to_string(cert.theorem));
  j["n"] = cert.n;
  j["status"] = std::string(to_string(cert.status));
  j["expected_sets"] = sets_json(cert.expected_sets);
  j["found_sets"] = sets_json(cert.found_sets);
  j["max_subset_size"] = cert.max_subset_size;
  j["nodes_explored"] = cert.nodes_explored;
  j["elapsed_ms"] = cert.elapsed_ms;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate cert;
    cert.schema_version = j.at("schema_version").get<std::string>();
    cert.theorem = parse_theorem(j.at("theorem").get<std::string>());
    cert.n = j.at("n").get<unsigned>();
    cert.status = parse_status(j.at("status").get<std::string>());
    cert.expected_sets = sets_from_json(j.at("expected_sets"));
    cert.found_sets = sets_from_json(j.at("found_sets"));
    cert.max_subset_size = j.at("max_subset_size").get<std::size_t>();
    cert.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    cert.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
}

std::string canonical_json(const Certificate& cert) { return to_json(cert).dump(2) + "\n"; }

void write_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ResourceError("cannot open '" + tmp.string() + "' for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw ResourceError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ResourceError("cannot replace '" + path.string() + "': " + ec.message());
  }
}

void emit_certificate(const Certificate& cert, const std::optional<std::filesystem::path>& path, std::ostream& out) {
  const std::string text = canonical_json(cert);
  if (path) {
    write_atomically(*path, text);
  } else {
    out << text;
  }
}

SearchBudget budget_from_environment() {
  SearchBudget budget;
  if (const char* env = std::getenv("FG_BUDGET_NODES"); env != nullptr && *env != '\0') {
    try {
      Wide v = parse_wide(env);
      if (v == 0 || v > std::numeric_limits<std::uint64_t>::max()) throw DomainError("out of range");
      budget.max_nodes = static_cast<std::uint64_t>(v);
    } catch (const DomainError&) {
      throw UsageError(std::string("FG_BUDGET_NODES must be a positive integer, got '") + env + "'");
    }
  }
  return budget;
}

namespace {

int status_exit(Status s) {
  switch (s) {
    case Status::Verified: return kSuccess;
    case Status::Refuted: return kPropertyFalse;
    case Status::ResourceExhausted: return kResource;
  }
  return kResource;
}

void require_positive(unsigned value, const char* flag) {
  if (value == 0) throw UsageError(std::string(flag) + " must be >= 1");
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Options {
  unsigned order = 0;
  bool json = false;
  std::string set;
  std::string terms;
  std::string algorithm = "bb";
  std::size_t min_size = 0;
  unsigned threads = default_threads();
  std::string out_path;
  std::string theorem;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned length = 0;
  unsigned bound = 0;
};

std::optional<std::filesystem::path> out_file(const Options& o) {
  if (o.out_path.empty()) return std::nullopt;
  return std::filesystem::path(o.out_path);
}

void print_line(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_farey(const Options& o, std::ostream& out) {
  require_positive(o.order, "--order");
  const auto seq = farey_sequence(o.order);
  if (o.json) {
    print_line(out, fractions_json(seq.elements));
  } else {
    for (const auto& f : seq.elements) out << f << "\n";
  }
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  require_positive(o.order, "--order");
  const FractionSet s = parse_fraction_list(o.set);
  try {
    require_subset_of_farey(s, o.order);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const ClosureReport closure = closure_check(s, o.order);
  const CoverageReport coverage = coverage_check(s, o.order);

  if (o.json) {
    ordered_json j;
    j["closed"] = closure.closed;
    if (closure.witness) {
      j["witness"] = {{"x", to_string(closure.witness->x)},
                      {"y", to_string(closure.witness->y)},
                      {"quotient", to_string(closure.witness->quotient)}};
    }
    j["covers"] = coverage.covers;
    j["missing"] = fractions_json(coverage.missing);
    j["extraneous"] = fractions_json(coverage.extraneous);
    print_line(out, j);
  } else {
    out << "closed: " << (closure.closed ? "true" : "false") << "\n";
    if (closure.witness) {
      out << "witness: " << closure.witness->x << " / " << closure.witness->y << " = " << closure.witness->quotient
          << " (not in F_" << o.order << ")\n";
    }
    out << "covers: " << (coverage.covers ? "true" : "false") << "\n";
    out << "missing: " << render_fraction_list({coverage.missing.begin(), coverage.missing.end()}) << "\n";
    out << "extraneous: " << render_fraction_list({coverage.extraneous.begin(), coverage.extraneous.end()}) << "\n";
  }
  return closure.closed ? kSuccess : kPropertyFalse;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const FractionSet q = quotient_set(parse_fraction_list(o.set));
  if (o.json) {
    print_line(out, to_json(q));
  } else {
    out << render_fraction_list(q) << "\n";
  }
  return kSuccess;
}

int cmd_search(const Options& o, std::ostream& out) {
  require_positive(o.order, "--order");
  require_positive(o.threads, "--threads");
  const CompatGraph g(o.order);
  const SearchBudget budget = budget_from_environment();

  if (o.min_size > 0) {
    ordered_json j;
    j["order"] = o.order;
    j["min_size"] = o.min_size;
    j["sets"] = sets_json(all_maximal_closed_sets(g, o.min_size, budget));
    const std::string text = j.dump(2) + "\n";
    if (auto path = out_file(o)) {
      write_atomically(*path, text);
    } else {
      out << text;
    }
    return kSuccess;
  }

  Certificate cert;
  if (o.algorithm == "naive") {
    const auto start = std::chrono::steady_clock::now();
    const SearchResult r = max_cliques_naive(g);
    cert.theorem = Theorem::T4;
    cert.n = o.order;
    cert.expected_sets = theorem4_expected_sets(o.order);
    cert.found_sets = r.cliques;
    cert.max_subset_size = r.max_size;
    cert.nodes_explored = r.nodes_explored;
    cert.status = assess(cert);
    cert.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  } else {
    cert = verify_theorem4(o.order, SearchOptions{budget, o.threads});
  }
  emit_certificate(cert, out_file(o), out);
  return status_exit(cert.status);
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_positive(o.order, "--order");
  require_positive(o.threads, "--threads");
  const SearchOptions options{budget_from_environment(), o.threads};
  Certificate cert;
  if (o.theorem == "1") {
    cert = verify_theorem1(o.order, options);
  } else if (o.theorem == "3") {
    cert = verify_theorem3(o.order, options);
  } else if (o.theorem == "4") {
    cert = verify_theorem4(o.order, options);
  } else {
    throw UsageError("--theorem must be 1, 3 or 4");
  }
  emit_certificate(cert, out_file(o), out);
  if (!o.out_path.empty()) {
    out << to_string(cert.theorem) << " n=" << cert.n << ": " << to_string(cert.status) << "\n";
  }
  return status_exit(cert.status);
}

int cmd_equiv(const Options& o, std::ostream& out) {
  require_positive(o.order, "--order");
  const Certificate cert = equivalence_certificate(o.order, o.samples, o.seed);
  emit_certificate(cert, out_file(o), out);
  if (!o.out_path.empty()) {
    out << "EQUIV n=" << cert.n << ": " << to_string(cert.status) << "\n";
  }
  return status_exit(cert.status);
}

int cmd_graham(const std::string& action, const Options& o, std::ostream& out) {
  if (action == "stat") {
    const GrahamSequence a(parse_terms(o.terms));
    const StatReport r = statistic(a);
    ordered_json j;
    j["terms"] = sequence_json(a);
    j["value"] = to_string(r.value);
    j["argmax"] = {r.i, r.j};
    print_line(out, j);
    return kSuccess;
  }
  if (action == "to-farey") {
    const GrahamSequence a(parse_terms(o.terms));
    print_line(out, to_json(graham_to_farey(a)));
    return kSuccess;
  }
  if (action == "from-farey") {
    const FractionSet s = parse_fraction_list(o.set);
    for (const auto& f : s) {
      if (f.num() > f.den()) throw UsageError("fraction " + to_string(f) + " exceeds 1");
    }
    print_line(out, sequence_json(farey_to_graham(s)));
    return kSuccess;
  }
  if (action == "bf1") {
    const Conjecture1Report r = brute_force_conjecture1(o.length, o.bound);
    ordered_json j;
    j["length"] = o.length;
    j["bound"] = o.bound;
    j["holds"] = r.holds;
    if (r.counterexample) j["counterexample"] = sequence_json(*r.counterexample);
    j["sequences_checked"] = r.sequences_checked;
    j["scope"] = "verified within bound";
    print_line(out, j);
    return r.holds ? kSuccess : kPropertyFalse;
  }
  if (action == "bf2") {
    ordered_json j;
    j["length"] = o.length;
    j["bound"] = o.bound;
    ordered_json seqs = ordered_json::array();
    for (const auto& a : brute_force_conjecture2(o.length, o.bound)) seqs.push_back(sequence_json(a));
    j["sequences"] = std::move(seqs);
    j["scope"] = "verified within bound";
    print_line(out, j);
    return kSuccess;
  }
  throw UsageError("unknown graham action");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Farey quotient-closed subsets and Graham's GCD problem", "fgverify"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* farey = app.add_subcommand("farey", "List the Farey sequence F_N");
  farey->add_option("--order", o.order, "Order N")->required();
  farey->add_flag("--json", o.json, "Emit a JSON array");

  auto* check = app.add_subcommand("check", "Closure and coverage of a subset of F_N");
  check->add_option("--set", o.set, "Comma-separated fractions, e.g. 0/1,1/2")->required();
  check->add_option("--order", o.order, "Order N")->required();
  check->add_flag("--json", o.json, "Emit JSON");

  auto* quotient = app.add_subcommand("quotient", "Print Q(S)");
  quotient->add_option("--set", o.set, "Comma-separated fractions")->required();
  quotient->add_flag("--json", o.json, "Emit a JSON array");

  auto* search = app.add_subcommand("search", "All maximum closed subsets of F_N");
  search->add_option("--order", o.order, "Order N")->required();
  search->add_option("--algorithm", o.algorithm, "bb or naive")->check(CLI::IsMember({"bb", "naive"}));
  search->add_option("--min-size", o.min_size, "List all maximal closed subsets of at least this size");
  search->add_option("--threads", o.threads, "Worker threads");
  search->add_option("--out", o.out_path, "Write JSON to this file");

  auto* graham = app.add_subcommand("graham", "Graham sequence tools");
  graham->require_subcommand(1);
  auto* g_stat = graham->add_subcommand("stat", "max a_i/(a_i,a_j)");
  g_stat->add_option("--terms", o.terms, "Comma-separated positive integers")->required();
  auto* g_to = graham->add_subcommand("to-farey", "Sequence to Farey subset");
  g_to->add_option("--terms", o.terms, "Comma-separated positive integers")->required();
  auto* g_from = graham->add_subcommand("from-farey", "Farey subset to sequence");
  g_from->add_option("--set", o.set, "Comma-separated fractions")->required();
  auto* g_bf1 = graham->add_subcommand("bf1", "Bounded scan: statistic >= length");
  g_bf1->add_option("--length", o.length, "Sequence length")->required();
  g_bf1->add_option("--bound", o.bound, "Largest term")->required();
  auto* g_bf2 = graham->add_subcommand("bf2", "Bounded scan: primitive sequences with statistic = length");
  g_bf2->add_option("--length", o.length, "Sequence length")->required();
  g_bf2->add_option("--bound", o.bound, "Largest term")->required();

  auto* verify = app.add_subcommand("verify", "Produce a verification certificate");
  verify->add_option("--theorem", o.theorem, "1, 3 or 4");
  verify->add_option("--order", o.order, "Order N");
  verify->add_option("--threads", o.threads, "Worker threads");
  verify->add_option("--out", o.out_path, "Write the certificate to this file");
  auto* equiv = verify->add_subcommand("equiv", "Cross-check both directions of the set/sequence equivalence");
  equiv->add_option("--order", o.order, "Order N")->required();
  equiv->add_option("--samples", o.samples, "Instances per direction");
  equiv->add_option("--seed", o.seed, "Random seed");
  equiv->add_option("--out", o.out_path, "Write the certificate to this file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (farey->parsed()) return cmd_farey(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (quotient->parsed()) return cmd_quotient(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (graham->parsed()) {
      for (auto* sub : {g_stat, g_to, g_from, g_bf1, g_bf2}) {
        if (sub->parsed()) return cmd_graham(sub->get_name(), o, out);
      }
    }
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (verify->parsed()) {
      if (o.theorem.empty()) throw UsageError("verify needs --theorem 1|3|4 or the equiv subcommand");
      return cmd_verify(o, out);
    }
    throw UsageError("no subcommand");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  }
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr); }

}  // namespace fg::cli
