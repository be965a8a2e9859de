#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yaps/diagnostic.hpp"

namespace yaps {

enum class Outcome { Pass, DeprecatedSyntax, Unsupported, SyntaxError, Mismatch, IOError };

std::string_view outcome_name(Outcome outcome);

struct FileResult {
  std::string path;
  Outcome outcome = Outcome::Pass;
  std::string stage;    // stage that failed; empty on success
  std::string message;  // first error of the failing stage
  std::optional<std::string> diff;  // for Mismatch
};

struct RoundTripReport {
  int total = 0;
  int passed = 0;
  /// Every failure cause, zero counts included.
  std::map<std::string, int> failed_by_cause;
  std::vector<FileResult> per_file;  // sorted by path
  Diagnostics diagnostics;           // corpus-level warnings
};

/// Stan -> surface -> IR on one document; Pass iff the IR before and after
/// is ast_equal. Mismatches carry a summary of at most five differing
/// statements.
FileResult roundtrip_source(std::string_view source, const std::string& path);
FileResult roundtrip_file(const std::filesystem::path& path);

/// Runs every `.stan` file under the given files and directories
/// (directories recursively), using up to `threads` workers (0: hardware
/// concurrency). The report does not depend on the worker count.
RoundTripReport run_corpus(const std::vector<std::filesystem::path>& paths, unsigned threads = 0);

/// One line per file, then `passed P of T (X%)`.
std::string report_text(const RoundTripReport& report);
std::string report_json(const RoundTripReport& report);

/// "96.8" for 30 of 31, "100" for 31 of 31, "0" for an empty corpus.
std::string pass_percentage(int passed, int total);

}  // namespace yaps
