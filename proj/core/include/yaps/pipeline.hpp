#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "yaps/builtins.hpp"
#include "yaps/diagnostic.hpp"
#include "yaps/ir.hpp"

namespace yaps {

struct CompileOptions {
  std::optional<std::string> model_name;
  const Builtins* builtins = nullptr;  // nullptr: Builtins::standard()
};

struct CompileResult {
  std::optional<Program> program;  // absent when any stage reported errors
  Diagnostics diagnostics;          // sorted
  std::string model_name;           // name of the compiled model function
};

/// Surface source to placed IR: lex, parse, scope check, lower and, for
/// blockless models, block inference. Stops after the first stage that
/// reports errors.
CompileResult compile_yaps(std::string_view source, std::string_view file,
                           const CompileOptions& options = {});

}  // namespace yaps
