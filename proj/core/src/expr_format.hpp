#pragma once

#include <string>

#include "yaps/ir.hpp"

namespace yaps::detail {

enum class Syntax { Stan, Yaps };

// Precedence levels shared by both printers; higher binds tighter.
inline constexpr int kPrecTernary = 1;
inline constexpr int kPrecOr = 2;
inline constexpr int kPrecAdditive = 6;
inline constexpr int kPrecUnary = 10;
inline constexpr int kPrecPostfix = 12;
inline constexpr int kPrecPrimary = 13;

/// Renders `expr`, parenthesizing it when it binds looser than `min_prec`.
std::string format_expr(const Expr& expr, Syntax syntax, int min_prec = kPrecTernary);

}  // namespace yaps::detail
