#include "yaps/ir.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace yaps {

SourceSpan SourceSpan::cover(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out = a;
  if (std::pair(b.start_line, b.start_col) < std::pair(a.start_line, a.start_col)) {
    out.start_line = b.start_line;
    out.start_col = b.start_col;
  }
  if (std::pair(b.end_line, b.end_col) > std::pair(a.end_line, a.end_col)) {
    out.end_line = b.end_line;
    out.end_col = b.end_col;
  }
  return out;
}

bool SourceSpan::valid() const {
  return start_line >= 1 && start_col >= 1 && end_line >= 1 && end_col >= 1 &&
         std::pair(start_line, start_col) <= std::pair(end_line, end_col);
}

std::string to_string(const SourceSpan& span) {
  return span.file + ":" + std::to_string(span.start_line) + ":" + std::to_string(span.start_col);
}

namespace {

struct BaseInfo {
  BaseType base;
  std::string_view name;
  int min_dims;
  int max_dims;
  bool bounds;
};

constexpr BaseInfo kBaseInfo[] = {
    {BaseType::Int, "int", 0, 0, true},
    {BaseType::Real, "real", 0, 0, true},
    {BaseType::Vector, "vector", 1, 1, true},
    {BaseType::RowVector, "row_vector", 1, 1, true},
    {BaseType::Matrix, "matrix", 2, 2, true},
    {BaseType::Simplex, "simplex", 1, 1, false},
    {BaseType::Ordered, "ordered", 1, 1, false},
    {BaseType::PositiveOrdered, "positive_ordered", 1, 1, false},
    {BaseType::UnitVector, "unit_vector", 1, 1, false},
    {BaseType::CorrMatrix, "corr_matrix", 1, 1, false},
    {BaseType::CovMatrix, "cov_matrix", 1, 1, false},
    {BaseType::CholeskyFactorCorr, "cholesky_factor_corr", 1, 1, false},
    {BaseType::CholeskyFactorCov, "cholesky_factor_cov", 1, 2, false},
};

const BaseInfo& info(BaseType base) {
  return kBaseInfo[static_cast<int>(base)];
}

}  // namespace

std::string_view base_type_name(BaseType base) { return info(base).name; }

std::optional<BaseType> base_type_from_name(std::string_view name) {
  for (const auto& entry : kBaseInfo) {
    if (entry.name == name) return entry.base;
  }
  return std::nullopt;
}

bool admits_bounds(BaseType base) { return info(base).bounds; }

std::pair<int, int> type_dim_arity(BaseType base) {
  return {info(base).min_dims, info(base).max_dims};
}

std::string_view block_stan_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::Functions: return "functions";
    case BlockKind::Data: return "data";
    case BlockKind::TransformedData: return "transformed data";
    case BlockKind::Parameters: return "parameters";
    case BlockKind::TransformedParameters: return "transformed parameters";
    case BlockKind::Model: return "model";
    case BlockKind::GeneratedQuantities: return "generated quantities";
  }
  return "";
}

std::string_view block_surface_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::Functions: return "functions";
    case BlockKind::Data: return "data";
    case BlockKind::TransformedData: return "transformed_data";
    case BlockKind::Parameters: return "parameters";
    case BlockKind::TransformedParameters: return "transformed_parameters";
    case BlockKind::Model: return "model";
    case BlockKind::GeneratedQuantities: return "generated_quantities";
  }
  return "";
}

std::optional<BlockKind> block_from_surface_name(std::string_view name) {
  for (BlockKind kind : kAllBlocks) {
    if (block_surface_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool Program::has_block(BlockKind kind) const {
  if (kind == BlockKind::Functions) return functions.has_value();
  return blocks.contains(kind);
}

const std::vector<Stmt>* Program::block(BlockKind kind) const {
  auto it = blocks.find(kind);
  return it == blocks.end() ? nullptr : &it->second;
}

Expr make_int(long long value, Span span) {
  return Expr{IntLit{std::to_string(value)}, std::move(span)};
}
Expr make_int_text(std::string text, Span span) {
  return Expr{IntLit{std::move(text)}, std::move(span)};
}
Expr make_real(std::string text, Span span) {
  return Expr{RealLit{std::move(text)}, std::move(span)};
}
Expr make_string(std::string value, Span span) {
  return Expr{StringLit{std::move(value)}, std::move(span)};
}
Expr make_var(std::string name, Span span) { return Expr{Var{std::move(name)}, std::move(span)}; }
Expr make_call(std::string name, std::vector<Expr> args, Span span) {
  return Expr{Call{std::move(name), std::move(args)}, std::move(span)};
}
Expr make_index(Expr base, std::vector<Expr> indices, Span span) {
  return Expr{Index{std::move(base), std::move(indices)}, std::move(span)};
}
Expr make_unary(UnaryOp op, Expr operand, Span span) {
  return Expr{Unary{op, std::move(operand)}, std::move(span)};
}
Expr make_binary(BinaryOp op, Expr lhs, Expr rhs, Span span) {
  return Expr{Binary{op, std::move(lhs), std::move(rhs)}, std::move(span)};
}
Expr make_ternary(Expr cond, Expr then_expr, Expr else_expr, Span span) {
  return Expr{Ternary{std::move(cond), std::move(then_expr), std::move(else_expr)},
              std::move(span)};
}
Expr make_transpose(Expr operand, Span span) {
  return Expr{Transpose{std::move(operand)}, std::move(span)};
}
Expr make_range(std::optional<Expr> lower, std::optional<Expr> upper, Span span) {
  Range range;
  if (lower) range.lower.emplace(std::move(*lower));
  if (upper) range.upper.emplace(std::move(*upper));
  return Expr{std::move(range), std::move(span)};
}

std::optional<long long> int_literal_value(const Expr& expr) {
  if (const auto* lit = std::get_if<IntLit>(&expr.node)) {
    long long value = 0;
    const char* first = lit->text.data();
    const char* last = first + lit->text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
  }
  if (const auto* unary = std::get_if<Unary>(&expr.node)) {
    if (unary->op != UnaryOp::Neg) return std::nullopt;
    auto inner = int_literal_value(*unary->operand);
    if (!inner || *inner == std::numeric_limits<long long>::min()) return std::nullopt;
    return -*inner;
  }
  return std::nullopt;
}

std::optional<std::string> lvalue_base(const Expr& expr) {
  if (const auto* var = std::get_if<Var>(&expr.node)) return var->name;
  if (const auto* index = std::get_if<Index>(&expr.node)) return lvalue_base(*index->base);
  return std::nullopt;
}

bool is_lvalue(const Expr& expr) { return lvalue_base(expr).has_value(); }

std::string_view binary_op_stan(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return "||";
    case BinaryOp::And: return "&&";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Neq: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Leq: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Geq: return ">=";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::IntDiv: return "%/%";
    case BinaryOp::LeftDiv: return "\\";
    case BinaryOp::EltMul: return ".*";
    case BinaryOp::EltDiv: return "./";
    case BinaryOp::Pow: return "^";
  }
  return "?";
}

std::string_view unary_op_stan(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Plus: return "+";
    case UnaryOp::Not: return "!";
  }
  return "?";
}

std::string_view assign_op_text(AssignOp op) {
  switch (op) {
    case AssignOp::Set: return "=";
    case AssignOp::Add: return "+=";
    case AssignOp::Sub: return "-=";
    case AssignOp::Mul: return "*=";
    case AssignOp::Div: return "/=";
  }
  return "=";
}

}  // namespace yaps
