#pragma once

#include "yaps/ir.hpp"

namespace yaps {

/// Canonical form used for round-trip comparison: spans cleared, integer
/// literals without leading zeros, unary minus folded into numeric literals,
/// empty blocks and empty else-branches dropped. Parentheses are not
/// represented in the IR, so precedence is already canonical.
/// Idempotent; performs no other constant folding.
Program normalize(const Program& program);
Expr normalize(const Expr& expr);
Stmt normalize(const Stmt& stmt);

/// normalize(a) == normalize(b).
bool ast_equal(const Program& a, const Program& b);

}  // namespace yaps
