#include "ir_generator.hpp"

namespace yaps::testing {

namespace {

const char* const kNames[] = {"a", "b", "mu", "sigma", "theta", "x", "y_obs", "n2", "alpha_1", "K"};
const char* const kFunctions[] = {"exp", "log", "sum", "inv_logit", "fabs", "helper", "pow"};
const char* const kDistributions[] = {"normal", "bernoulli", "poisson", "gamma", "my_dist"};
const char* const kDensities[] = {"normal_lpdf", "poisson_lpmf", "normal_lcdf", "my_dist_lupdf"};
const char* const kReals[] = {"0.5", "1.25", "3e2", "2.5e-3", "10.0", "7E+1"};
const char* const kStrings[] = {"value", "x = ", "", "a, b"};
const char* const kLoopVars[] = {"i", "j", "k"};
const char* const kFunctionNames[] = {"helper", "twice", "scale_by"};

const BinaryOp kBinaryOps[] = {
    BinaryOp::Or,  BinaryOp::And, BinaryOp::Eq,     BinaryOp::Neq,     BinaryOp::Lt,
    BinaryOp::Leq, BinaryOp::Gt,  BinaryOp::Geq,    BinaryOp::Add,     BinaryOp::Sub,
    BinaryOp::Mul, BinaryOp::Div, BinaryOp::Mod,    BinaryOp::IntDiv,  BinaryOp::LeftDiv,
    BinaryOp::EltMul, BinaryOp::EltDiv, BinaryOp::Pow};
const UnaryOp kUnaryOps[] = {UnaryOp::Neg, UnaryOp::Plus, UnaryOp::Not};
const AssignOp kAssignOps[] = {AssignOp::Set, AssignOp::Add, AssignOp::Sub, AssignOp::Mul,
                               AssignOp::Div};
const BaseType kBaseTypes[] = {BaseType::Int,     BaseType::Real,       BaseType::Vector,
                               BaseType::RowVector, BaseType::Matrix,   BaseType::Simplex,
                               BaseType::Ordered, BaseType::PositiveOrdered, BaseType::UnitVector,
                               BaseType::CorrMatrix, BaseType::CovMatrix,
                               BaseType::CholeskyFactorCorr, BaseType::CholeskyFactorCov};

}  // namespace

int ProgramGenerator::pick(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool ProgramGenerator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

std::string ProgramGenerator::name() { return one_of(kNames); }

Expr ProgramGenerator::int_leaf() {
  return chance(0.5) ? make_int(pick(0, 20)) : make_var(name());
}

Expr ProgramGenerator::leaf() {
  switch (pick(0, 3)) {
    case 0: return make_int(pick(0, 100));
    case 1: return make_real(one_of(kReals));
    default: return make_var(name());
  }
}

Expr ProgramGenerator::index_arg(int depth) {
  if (!chance(0.2)) return expr(depth);
  std::optional<Expr> lo;
  std::optional<Expr> hi;
  if (chance(0.7)) lo = expr(depth);
  if (chance(0.7)) hi = expr(depth);
  return make_range(std::move(lo), std::move(hi));
}

Expr ProgramGenerator::expr(int depth) {
  if (depth <= 1 || chance(0.25)) return leaf();
  const int inner = depth - 1;
  switch (pick(0, 7)) {
    case 0: {
      std::vector<Expr> indices;
      for (int i = pick(1, 2); i > 0; --i) indices.push_back(index_arg(inner));
      return make_index(make_var(name()), std::move(indices));
    }
    case 1: {
      std::vector<Expr> args;
      for (int i = pick(0, 3); i > 0; --i) args.push_back(expr(inner));
      return make_call(one_of(kFunctions), std::move(args));
    }
    case 2: {
      std::vector<Expr> args;
      for (int i = pick(1, 3); i > 0; --i) args.push_back(expr(inner));
      return make_call(one_of(kDensities), std::move(args));
    }
    case 3: return make_unary(one_of(kUnaryOps), expr(inner));
    case 4: return make_ternary(expr(inner), expr(inner), expr(inner));
    case 5: return make_transpose(expr(inner));
    default: return make_binary(one_of(kBinaryOps), expr(inner), expr(inner));
  }
}

Expr ProgramGenerator::lvalue(int depth) {
  if (chance(0.5)) return make_var(name());
  std::vector<Expr> indices;
  for (int i = pick(1, 2); i > 0; --i) indices.push_back(index_arg(std::max(1, depth - 1)));
  return make_index(make_var(name()), std::move(indices));
}

StanType ProgramGenerator::type(bool constrained) {
  StanType t;
  t.base = one_of(kBaseTypes);
  auto [lo, hi] = type_dim_arity(t.base);
  for (int i = pick(lo, hi); i > 0; --i) t.type_dims.push_back(int_leaf());
  if (constrained && admits_bounds(t.base)) {
    if (chance(0.4)) t.lower = expr(2);
    if (chance(0.3)) t.upper = expr(2);
  }
  for (int i = pick(0, 2); i > 0; --i) t.array_dims.push_back(int_leaf());
  return t;
}

ArgType ProgramGenerator::arg_type() {
  ArgType t;
  t.base = chance(0.5) ? BaseType::Real : one_of(kBaseTypes);
  // Only unconstrained base types are valid in signatures.
  if (t.base != BaseType::Int && t.base != BaseType::Vector && t.base != BaseType::RowVector &&
      t.base != BaseType::Matrix) {
    t.base = BaseType::Real;
  }
  t.array_rank = pick(0, 2);
  return t;
}

DistCall ProgramGenerator::dist(int depth) {
  DistCall d;
  d.name = one_of(kDistributions);
  for (int i = pick(0, 3); i > 0; --i) d.args.push_back(expr(depth));
  if (chance(0.2)) {
    DistCall::Truncation t;
    if (chance(0.7)) t.lower = expr(2);
    if (!t.lower || chance(0.5)) t.upper = expr(2);
    d.truncation = std::move(t);
  }
  return d;
}

Stmt ProgramGenerator::declare(bool constrained, bool with_init, int depth) {
  Declare d{Decl{name(), type(constrained), {}}, std::nullopt};
  if (with_init) d.init = expr(depth);
  return make_stmt(std::move(d));
}

std::vector<Stmt> ProgramGenerator::body(BlockKind block, int depth, bool in_loop,
                                         bool in_function, int max_len) {
  std::vector<Stmt> out;
  for (int i = pick(0, max_len); i > 0; --i) {
    out.push_back(statement(block, depth, in_loop, in_function));
  }
  return out;
}

Stmt ProgramGenerator::statement(BlockKind block, int depth, bool in_loop, bool in_function) {
  const bool model = block == BlockKind::Model && !in_function;
  const bool nest = depth > 1;
  const int inner = depth - 1;
  const int kind = pick(0, 13);
  switch (kind) {
    case 0:
      return declare(false, chance(0.5), std::max(1, inner));
    case 1:
      if (model) return make_stmt(Sample{lvalue(depth), dist(std::max(1, inner))});
      break;
    case 2:
      if (model) return make_stmt(TargetIncrement{expr(depth)});
      break;
    case 3:
      if (nest) {
        return make_stmt(For{one_of(kLoopVars), expr(std::min(3, depth)),
                             expr(std::min(3, depth)), body(block, inner, true, in_function, 3)});
      }
      break;
    case 4:
      if (nest) return make_stmt(While{expr(inner), body(block, inner, true, in_function, 2)});
      break;
    case 5:
      if (nest) {
        If s{expr(inner), body(block, inner, in_loop, in_function, 2), std::nullopt};
        if (chance(0.5)) {
          if (chance(0.4)) {
            std::vector<Stmt> chain;
            chain.push_back(make_stmt(
                If{expr(inner), body(block, inner, in_loop, in_function, 2), std::nullopt}));
            s.else_body = std::move(chain);
          } else {
            s.else_body = body(block, inner, in_loop, in_function, 2);
          }
        }
        return make_stmt(std::move(s));
      }
      break;
    case 6:
      if (in_loop) return chance(0.5) ? make_stmt(Break{}) : make_stmt(Continue{});
      break;
    case 7:
    case 8: {
      std::vector<Expr> args;
      for (int i = pick(1, 3); i > 0; --i) {
        args.push_back(chance(0.4) ? make_string(one_of(kStrings)) : expr(std::max(1, inner)));
      }
      if (kind == 7) return make_stmt(Print{std::move(args)});
      return make_stmt(Reject{std::move(args)});
    }
    case 9:
      if (nest) return make_stmt(LocalBlock{body(block, inner, in_loop, in_function, 3)});
      break;
    case 10:
      if (in_function) {
        return make_stmt(Return{chance(0.8) ? std::optional<Expr>(expr(depth)) : std::nullopt});
      }
      break;
    case 11: {
      std::vector<Expr> args;
      for (int i = pick(0, 2); i > 0; --i) args.push_back(expr(std::max(1, inner)));
      return make_stmt(CallStmt{Call{one_of(kFunctionNames), std::move(args)}});
    }
    default:
      break;
  }
  return make_stmt(Assign{lvalue(depth), one_of(kAssignOps), expr(std::max(1, inner))});
}

FunctionDef ProgramGenerator::function() {
  FunctionDef fn;
  fn.name = one_of(kFunctionNames);
  if (chance(0.7)) fn.return_type = arg_type();
  for (int i = pick(0, 3); i > 0; --i) fn.params.push_back({name(), arg_type()});
  fn.body = body(BlockKind::Functions, max_depth_, false, true, 3);
  return fn;
}

Program ProgramGenerator::program() {
  Program p;
  if (chance(0.3)) {
    std::vector<FunctionDef> fns;
    for (int i = pick(1, 2); i > 0; --i) fns.push_back(function());
    p.functions = std::move(fns);
  }
  for (BlockKind kind : kAllBlocks) {
    if (kind == BlockKind::Functions || chance(0.3)) continue;
    std::vector<Stmt> stmts;
    const int n = pick(1, 4);
    if (kind == BlockKind::Data || kind == BlockKind::Parameters) {
      for (int i = 0; i < n; ++i) stmts.push_back(declare(true, false, 1));
    } else {
      const bool constrained = kind != BlockKind::Model;
      for (int i = pick(0, 2); i > 0; --i) {
        stmts.push_back(declare(constrained, chance(0.5), max_depth_ - 1));
      }
      for (int i = 0; i < n; ++i) stmts.push_back(statement(kind, max_depth_, false, false));
    }
    p.blocks[kind] = std::move(stmts);
  }
  return p;
}

}  // namespace yaps::testing
