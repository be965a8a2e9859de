#include "yaps/lower.hpp"

#include <limits>

namespace yaps {

namespace {

bool is_int_one(const Expr& e) {
  const auto* lit = std::get_if<IntLit>(&e.node);
  return lit && int_literal_value(e) == 1;
}

// `e + 1`
const Expr* plus_one_operand(const Expr& e) {
  const auto* bin = std::get_if<Binary>(&e.node);
  if (bin && bin->op == BinaryOp::Add && is_int_one(*bin->rhs)) return &*bin->lhs;
  return nullptr;
}

// `e - 1`
const Expr* minus_one_operand(const Expr& e) {
  const auto* bin = std::get_if<Binary>(&e.node);
  if (bin && bin->op == BinaryOp::Sub && is_int_one(*bin->rhs)) return &*bin->lhs;
  return nullptr;
}

void check_returns(const std::vector<Stmt>& stmts, Diagnostics& diags) {
  for (const auto& s : stmts) {
    std::visit(Overloaded{
                   [&](const Return&) {
                     diags.push_back(Diagnostic::error(codes::kReturnOutsideFunction,
                                                       "return outside of a function", s.span));
                   },
                   [&](const For& f) { check_returns(f.body, diags); },
                   [&](const While& w) { check_returns(w.body, diags); },
                   [&](const If& i) {
                     check_returns(i.then_body, diags);
                     if (i.else_body) check_returns(*i.else_body, diags);
                   },
                   [&](const LocalBlock& b) { check_returns(b.body, diags); },
                   [](const auto&) {},
               },
               s.node);
  }
}

Stmt formal_decl(const FormalArg& formal) {
  return make_stmt(Declare{formal.decl, std::nullopt}, formal.span);
}

// Appends the IR form of one surface statement; definitions go to `functions`.
void lower_into(const SurfaceStmt& s, std::vector<Stmt>& out, std::vector<FunctionDef>* functions,
                std::vector<UnplacedStmt>* unplaced, Diagnostics& diags) {
  auto emit = [&](Stmt stmt) {
    check_returns({stmt}, diags);
    if (unplaced) {
      unplaced->emplace_back(std::move(stmt));
    } else {
      out.push_back(std::move(stmt));
    }
  };
  std::visit(Overloaded{
                 [&](const Stmt& stmt) { emit(stmt); },
                 [&](const AnnotatedSample& a) {
                   emit(make_stmt(Declare{a.decl, std::nullopt}, a.span));
                   emit(make_stmt(Sample{make_var(a.decl.name, a.decl.span), a.dist}, a.span));
                 },
                 [&](const FunctionDef& fn) {
                   if (unplaced) {
                     unplaced->emplace_back(fn);
                   } else {
                     functions->push_back(fn);
                   }
                 },
             },
             s.node);
}

}  // namespace

Expr inclusive_upper(Expr bound) {
  if (auto v = int_literal_value(bound); v && *v != std::numeric_limits<long long>::min()) {
    return make_int(*v - 1, bound.span);
  }
  if (const Expr* inner = plus_one_operand(bound)) return *inner;
  Span span = bound.span;
  return make_binary(BinaryOp::Sub, std::move(bound), make_int(1), span);
}

Expr exclusive_upper(const Expr& bound) {
  if (auto v = int_literal_value(bound); v && *v != std::numeric_limits<long long>::max()) {
    return make_int(*v + 1, bound.span);
  }
  if (const Expr* inner = minus_one_operand(bound)) {
    if (!int_literal_value(*inner) && !plus_one_operand(*inner)) return *inner;
  }
  return make_binary(BinaryOp::Add, bound, make_int(1), bound.span);
}

LowerResult lower(const SurfaceModel& model) {
  LowerResult result;
  if (!model.explicit_blocks) {
    UnplacedModel unplaced;
    for (const auto& formal : model.formal_args) unplaced.formals.push_back(formal_decl(formal));
    std::vector<Stmt> unused;
    for (const auto& s : model.body) {
      lower_into(s, unused, nullptr, &unplaced.body, result.diagnostics);
    }
    result.output = std::move(unplaced);
    return result;
  }

  Program program;
  std::vector<FunctionDef> functions;
  bool has_functions = false;
  for (const auto& s : model.body) {
    std::vector<Stmt> ignored;
    lower_into(s, ignored, &functions, nullptr, result.diagnostics);
    has_functions = true;
  }
  if (!model.formal_args.empty()) {
    auto& data = program.blocks[BlockKind::Data];
    for (const auto& formal : model.formal_args) data.push_back(formal_decl(formal));
  }
  for (const auto& block : *model.explicit_blocks) {
    if (block.kind == BlockKind::Functions) {
      has_functions = true;
      std::vector<Stmt> ignored;
      for (const auto& s : block.body) {
        lower_into(s, ignored, &functions, nullptr, result.diagnostics);
      }
      continue;
    }
    auto& out = program.blocks[block.kind];
    for (const auto& s : block.body) lower_into(s, out, &functions, nullptr, result.diagnostics);
  }
  if (has_functions) program.functions = std::move(functions);
  result.output = std::move(program);
  return result;
}

}  // namespace yaps
