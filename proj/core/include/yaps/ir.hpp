#pragma once

// Language-neutral intermediate representation shared by the YAPS and Stan
// front ends and back ends. Every node carries an optional source span so
// IR produced from Stan text (or synthesized in tests) needs no fake
// locations; comparisons go through normalize() which clears them.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "yaps/box.hpp"
#include "yaps/source_span.hpp"

namespace yaps {

using Span = std::optional<SourceSpan>;

// ---------------------------------------------------------------------------
// Expressions

struct Expr;
struct Stmt;

struct IntLit {
  std::string text;  // decimal digits, optionally with a leading '-'
  friend bool operator==(const IntLit&, const IntLit&) = default;
};

struct RealLit {
  std::string text;  // lexeme as written, optionally with a leading '-'
  friend bool operator==(const RealLit&, const RealLit&) = default;
};

struct StringLit {
  std::string value;  // contents between the quotes, escapes kept verbatim
  friend bool operator==(const StringLit&, const StringLit&) = default;
};

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};

struct Index {
  Box<Expr> base;
  std::vector<Expr> indices;
  friend bool operator==(const Index&, const Index&) = default;
};

struct Call {
  std::string name;
  std::vector<Expr> args;
  friend bool operator==(const Call&, const Call&) = default;
};

enum class UnaryOp { Neg, Plus, Not };

struct Unary {
  UnaryOp op;
  Box<Expr> operand;
  friend bool operator==(const Unary&, const Unary&) = default;
};

enum class BinaryOp {
  Or,
  And,
  Eq,
  Neq,
  Lt,
  Leq,
  Gt,
  Geq,
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  IntDiv,
  LeftDiv,
  EltMul,
  EltDiv,
  Pow,
};

struct Binary {
  BinaryOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

struct Ternary {
  Box<Expr> cond;
  Box<Expr> then_expr;
  Box<Expr> else_expr;
  friend bool operator==(const Ternary&, const Ternary&) = default;
};

struct Transpose {
  Box<Expr> operand;
  friend bool operator==(const Transpose&, const Transpose&) = default;
};

/// Slice `lo:hi`; either bound may be absent. Only valid as an index.
struct Range {
  std::optional<Box<Expr>> lower;
  std::optional<Box<Expr>> upper;
  friend bool operator==(const Range&, const Range&) = default;
};

struct Expr {
  using Node = std::variant<IntLit, RealLit, StringLit, Var, Index, Call, Unary, Binary,
                            Ternary, Transpose, Range>;
  Node node;
  Span span;

  friend bool operator==(const Expr&, const Expr&) = default;
};

// ---------------------------------------------------------------------------
// Types

enum class BaseType {
  Int,
  Real,
  Vector,
  RowVector,
  Matrix,
  Simplex,
  Ordered,
  PositiveOrdered,
  UnitVector,
  CorrMatrix,
  CovMatrix,
  CholeskyFactorCorr,
  CholeskyFactorCov,
};

/// Sized Stan type as it appears in a variable declaration.
struct StanType {
  BaseType base = BaseType::Real;
  std::optional<Expr> lower;
  std::optional<Expr> upper;
  std::vector<Expr> type_dims;
  std::vector<Expr> array_dims;

  friend bool operator==(const StanType&, const StanType&) = default;
};

/// Unsized type used in function signatures: `vector`, `real[,]`.
struct ArgType {
  BaseType base = BaseType::Real;
  int array_rank = 0;
  friend bool operator==(const ArgType&, const ArgType&) = default;
};

/// Stan keyword for a base type (`cholesky_factor_cov`).
std::string_view base_type_name(BaseType base);
std::optional<BaseType> base_type_from_name(std::string_view name);
/// Base types that accept `<lower=, upper=>` constraints.
bool admits_bounds(BaseType base);
/// Allowed counts of size arguments, e.g. {2, 2} for matrix.
std::pair<int, int> type_dim_arity(BaseType base);

// ---------------------------------------------------------------------------
// Statements

struct Decl {
  std::string name;
  StanType type;
  Span span;  // the declared name
  friend bool operator==(const Decl&, const Decl&) = default;
};

struct DistCall {
  std::string name;
  std::vector<Expr> args;
  struct Truncation {
    std::optional<Expr> lower;
    std::optional<Expr> upper;
    friend bool operator==(const Truncation&, const Truncation&) = default;
  };
  std::optional<Truncation> truncation;
  friend bool operator==(const DistCall&, const DistCall&) = default;
};

struct Declare {
  Decl decl;
  std::optional<Expr> init;
  friend bool operator==(const Declare&, const Declare&) = default;
};

enum class AssignOp { Set, Add, Sub, Mul, Div };

struct Assign {
  Expr lhs;
  AssignOp op = AssignOp::Set;
  Expr rhs;
  friend bool operator==(const Assign&, const Assign&) = default;
};

struct Sample {
  Expr lhs;
  DistCall dist;
  friend bool operator==(const Sample&, const Sample&) = default;
};

struct TargetIncrement {
  Expr value;
  friend bool operator==(const TargetIncrement&, const TargetIncrement&) = default;
};

/// Inclusive integer loop `for (var in lower:upper)`.
struct For {
  std::string var;
  Expr lower;
  Expr upper;
  std::vector<Stmt> body;
  friend bool operator==(const For&, const For&) = default;
};

struct While {
  Expr cond;
  std::vector<Stmt> body;
  friend bool operator==(const While&, const While&) = default;
};

struct If {
  Expr cond;
  std::vector<Stmt> then_body;
  std::optional<std::vector<Stmt>> else_body;
  friend bool operator==(const If&, const If&) = default;
};

struct Break {
  friend bool operator==(const Break&, const Break&) = default;
};

struct Continue {
  friend bool operator==(const Continue&, const Continue&) = default;
};

struct Print {
  std::vector<Expr> args;
  friend bool operator==(const Print&, const Print&) = default;
};

struct Reject {
  std::vector<Expr> args;
  friend bool operator==(const Reject&, const Reject&) = default;
};

struct LocalBlock {
  std::vector<Stmt> body;
  friend bool operator==(const LocalBlock&, const LocalBlock&) = default;
};

struct Return {
  std::optional<Expr> value;
  friend bool operator==(const Return&, const Return&) = default;
};

/// Call of a void function as a statement.
struct CallStmt {
  Call call;
  friend bool operator==(const CallStmt&, const CallStmt&) = default;
};

struct Stmt {
  using Node = std::variant<Declare, Assign, Sample, TargetIncrement, For, While, If, Break,
                            Continue, Print, Reject, LocalBlock, Return, CallStmt>;
  Node node;
  Span span;

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

// ---------------------------------------------------------------------------
// Program

struct FunctionParam {
  std::string name;
  ArgType type;
  friend bool operator==(const FunctionParam&, const FunctionParam&) = default;
};

struct FunctionDef {
  std::string name;
  std::optional<ArgType> return_type;  // nullopt for void
  std::vector<FunctionParam> params;
  std::vector<Stmt> body;
  Span span;
  friend bool operator==(const FunctionDef&, const FunctionDef&) = default;
};

enum class BlockKind {
  Functions,
  Data,
  TransformedData,
  Parameters,
  TransformedParameters,
  Model,
  GeneratedQuantities,
};

inline constexpr std::array<BlockKind, 7> kAllBlocks = {
    BlockKind::Functions,  BlockKind::Data,  BlockKind::TransformedData,
    BlockKind::Parameters, BlockKind::TransformedParameters, BlockKind::Model,
    BlockKind::GeneratedQuantities};

/// Stan spelling: "transformed parameters".
std::string_view block_stan_name(BlockKind kind);
/// Surface spelling: "transformed_parameters".
std::string_view block_surface_name(BlockKind kind);
std::optional<BlockKind> block_from_surface_name(std::string_view name);

struct Program {
  /// Present iff the program has a functions block.
  std::optional<std::vector<FunctionDef>> functions;
  /// Statement blocks keyed by kind; std::map iteration gives the fixed Stan
  /// block order. Never holds BlockKind::Functions.
  std::map<BlockKind, std::vector<Stmt>> blocks;

  bool has_block(BlockKind kind) const;
  const std::vector<Stmt>* block(BlockKind kind) const;

  friend bool operator==(const Program&, const Program&) = default;
};

// ---------------------------------------------------------------------------
// Construction helpers used by the parsers and tests.

Expr make_int(long long value, Span span = {});
Expr make_int_text(std::string text, Span span = {});
Expr make_real(std::string text, Span span = {});
Expr make_string(std::string value, Span span = {});
Expr make_var(std::string name, Span span = {});
Expr make_call(std::string name, std::vector<Expr> args, Span span = {});
Expr make_index(Expr base, std::vector<Expr> indices, Span span = {});
Expr make_unary(UnaryOp op, Expr operand, Span span = {});
Expr make_binary(BinaryOp op, Expr lhs, Expr rhs, Span span = {});
Expr make_ternary(Expr cond, Expr then_expr, Expr else_expr, Span span = {});
Expr make_transpose(Expr operand, Span span = {});
Expr make_range(std::optional<Expr> lower, std::optional<Expr> upper, Span span = {});

template <typename Node>
Stmt make_stmt(Node node, Span span = {}) {
  return Stmt{Stmt::Node{std::move(node)}, std::move(span)};
}

/// Integer value of an integer literal, looking through unary minus.
std::optional<long long> int_literal_value(const Expr& expr);

/// Variable at the root of an lvalue (`x` for `x[i][j]`), if any.
std::optional<std::string> lvalue_base(const Expr& expr);
bool is_lvalue(const Expr& expr);

std::string_view binary_op_stan(BinaryOp op);
std::string_view unary_op_stan(UnaryOp op);
std::string_view assign_op_text(AssignOp op);

}  // namespace yaps
