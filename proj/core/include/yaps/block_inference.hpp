#pragma once

#include <map>
#include <string>
#include <string_view>

#include "yaps/diagnostic.hpp"
#include "yaps/ir.hpp"
#include "yaps/lower.hpp"

namespace yaps {

enum class VarClass {
  DataVar,
  TransformedDataVar,
  ParamVar,
  TransformedParamVar,
  GenQuantVar,
  LocalVar,
};

std::string_view var_class_name(VarClass cls);

struct BlockInferenceResult {
  Program program;
  std::map<std::string, VarClass> classes;
  Diagnostics diagnostics;
};

/// Places blockless statements into Stan blocks.
///
/// Formals are data. A top-level variable that is never assigned is a
/// parameter (sampled or not). An assigned variable is transformed data
/// unless its definition depends on a parameter; then it is a transformed
/// parameter when the model reads it, directly or through another
/// transformed parameter or a local, and a generated quantity otherwise.
/// Sampling and `target +=` statements go to the model block; control flow
/// goes to the single block of the statements it contains. The data block
/// is always present; other blocks only when non-empty.
BlockInferenceResult infer_blocks(const UnplacedModel& model);

}  // namespace yaps
