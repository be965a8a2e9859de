#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "yaps/diagnostic.hpp"
#include "yaps/surface.hpp"
#include "yaps/yaps_lexer.hpp"

namespace yaps {

struct YapsParseResult {
  std::optional<SurfaceModel> model;
  Diagnostics diagnostics;
};

/// Parses a token stream into the selected model. A file may hold several
/// functions decorated with `@yaps.model` or `@model`; the first is used
/// unless `model_name` picks another. Other top-level Python (imports,
/// undecorated functions, assignments) is skipped without interpretation,
/// except `N = yaps.dependent_type_var()` which declares a size variable.
/// Stops at the first syntax error.
YapsParseResult parse_yaps(std::span<const YToken> tokens,
                           const std::optional<std::string>& model_name = std::nullopt);

/// Convenience: lex then parse. Lexer errors suppress parsing.
YapsParseResult parse_yaps_source(std::string_view source, std::string_view file,
                                  const std::optional<std::string>& model_name = std::nullopt);

}  // namespace yaps
