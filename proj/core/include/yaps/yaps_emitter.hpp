#pragma once

#include <string>

#include "yaps/diagnostic.hpp"
#include "yaps/ir.hpp"

namespace yaps {

struct YapsEmitResult {
  std::string text;  // empty when diagnostics has errors
  Diagnostics diagnostics;
};

/// Prints a Program as a surface model named `model_name`. Data
/// declarations become typed formal arguments and every other block an
/// explicit `with` block. Identifiers that are surface-language keywords
/// cannot be expressed and yield E_KEYWORD_CLASH.
YapsEmitResult emit_yaps(const Program& program, const std::string& model_name = "model");

}  // namespace yaps
