#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "yaps/diagnostic.hpp"
#include "yaps/ir.hpp"

namespace yaps {

struct StanParseResult {
  std::optional<Program> program;
  Diagnostics diagnostics;
};

/// Parses Stan source into IR. Accepts both `int x[N]` and `array[N] int x`
/// declarations. Deprecated constructs (`<-`, `increment_log_prob`, `lp__`,
/// and a few retired functions) are rejected with E_DEPRECATED; constructs
/// the IR cannot hold are rejected with E_UNSUPPORTED. Stops at the first
/// error.
StanParseResult parse_stan(std::string_view source, std::string_view file = "<input>");

enum class FailureCause { DeprecatedSyntax, Unsupported, SyntaxError };

std::string_view failure_cause_name(FailureCause cause);

/// DeprecatedSyntax if any E_DEPRECATED, else Unsupported if any
/// E_UNSUPPORTED, else SyntaxError.
FailureCause classify_failure(std::span<const Diagnostic> diagnostics);

}  // namespace yaps
