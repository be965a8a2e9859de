#pragma once

#include <variant>
#include <vector>

#include "yaps/diagnostic.hpp"
#include "yaps/ir.hpp"
#include "yaps/surface.hpp"

namespace yaps {

/// A top-level statement not yet assigned to a Stan block.
using UnplacedStmt = std::variant<Stmt, FunctionDef>;

/// Blockless model handed to block inference.
struct UnplacedModel {
  /// Formal arguments as `Declare` statements, in signature order.
  std::vector<Stmt> formals;
  std::vector<UnplacedStmt> body;
};

struct LowerResult {
  /// Program for explicit-block models, UnplacedModel otherwise.
  std::variant<Program, UnplacedModel> output;
  Diagnostics diagnostics;
};

/// Surface model to IR. Explicit `with` blocks map one-to-one onto program
/// blocks and formal arguments become data declarations; blockless bodies are
/// returned unplaced, in order. Declare-and-sample statements split into a
/// declaration followed by a sampling statement.
LowerResult lower(const SurfaceModel& model);

/// Inclusive Stan loop bound for an exclusive `range` upper bound `b`:
/// a literal is decremented, `e + 1` becomes `e`, anything else `b - 1`.
Expr inclusive_upper(Expr exclusive_bound);
/// Inverse of inclusive_upper: inclusive_upper(exclusive_upper(h)) == h.
Expr exclusive_upper(const Expr& inclusive_bound);

}  // namespace yaps
