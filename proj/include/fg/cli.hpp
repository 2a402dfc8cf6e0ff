#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fg/verify.hpp"

namespace fg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFalse = 1,
  kUsage = 2,
  kResource = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated "p/q" or bare "k" tokens, reduced and de-duplicated.
/// Throws UsageError naming the offending token.
FractionSet parse_fraction_list(std::string_view text);

/// Comma-separated positive integers. Throws UsageError.
std::vector<Wide> parse_terms(std::string_view text);

/// "p/q,p/q,..." ascending; inverse of parse_fraction_list.
std::string render_fraction_list(const FractionSet& s);

nlohmann::ordered_json to_json(const FractionSet& s);
nlohmann::ordered_json to_json(const Certificate& cert);

/// Throws UsageError on a malformed document.
Certificate certificate_from_json(const nlohmann::json& j);

/// Two-space indented JSON, fixed key order, trailing LF.
std::string canonical_json(const Certificate& cert);

/// Writes `contents` to a temporary sibling of `path`, then renames it over
/// `path`. Throws ResourceError on I/O failure.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

/// Canonical JSON to `path`, or to `out` when no path is given.
void emit_certificate(const Certificate& cert, const std::optional<std::filesystem::path>& path, std::ostream& out);

/// Node budget from FG_BUDGET_NODES when set, else the default.
SearchBudget budget_from_environment();

/// Full command line front end. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace fg::cli
