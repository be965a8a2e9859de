#pragma once

#include <string>

#include "yaps/ir.hpp"
#include "yaps/source_map.hpp"

namespace yaps {

struct EmitResult {
  std::string text;
  SourceMap map;
};

/// Prints a placed Program as Stan: blocks in Stan order, two-space indent,
/// one statement per line, `int<lower=0,upper=1> x[10];` declarations.
/// Every emitted statement line whose IR node has a span gets a map entry.
EmitResult emit_stan(const Program& program);

}  // namespace yaps
