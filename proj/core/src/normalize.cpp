#include "yaps/normalize.hpp"

namespace yaps {

namespace {

std::string canonical_int(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto first = text.find_first_not_of('0');
  std::string digits = first == std::string_view::npos ? "0" : std::string(text.substr(first));
  if (digits == "0") return digits;
  return negative ? "-" + digits : digits;
}

std::string negate_real(const std::string& text) {
  if (!text.empty() && text.front() == '-') return text.substr(1);
  return "-" + text;
}

std::vector<Expr> normalize_all(const std::vector<Expr>& exprs) {
  std::vector<Expr> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(normalize(e));
  return out;
}

std::optional<Expr> normalize_opt(const std::optional<Expr>& expr) {
  if (!expr) return std::nullopt;
  return normalize(*expr);
}

std::vector<Stmt> normalize_body(const std::vector<Stmt>& body) {
  std::vector<Stmt> out;
  out.reserve(body.size());
  for (const auto& s : body) out.push_back(normalize(s));
  return out;
}

StanType normalize_type(const StanType& type) {
  return StanType{type.base, normalize_opt(type.lower), normalize_opt(type.upper),
                  normalize_all(type.type_dims), normalize_all(type.array_dims)};
}

Decl normalize_decl(const Decl& decl) { return Decl{decl.name, normalize_type(decl.type), {}}; }

DistCall normalize_dist(const DistCall& dist) {
  DistCall out{dist.name, normalize_all(dist.args), std::nullopt};
  if (dist.truncation) {
    out.truncation = DistCall::Truncation{normalize_opt(dist.truncation->lower),
                                          normalize_opt(dist.truncation->upper)};
  }
  return out;
}

Expr::Node normalize_node(const Expr::Node& node) {
  return std::visit(
      Overloaded{
          [](const IntLit& lit) -> Expr::Node { return IntLit{canonical_int(lit.text)}; },
          [](const RealLit& lit) -> Expr::Node { return lit; },
          [](const StringLit& lit) -> Expr::Node { return lit; },
          [](const Var& var) -> Expr::Node { return var; },
          [](const Index& index) -> Expr::Node {
            return Index{normalize(*index.base), normalize_all(index.indices)};
          },
          [](const Call& call) -> Expr::Node { return Call{call.name, normalize_all(call.args)}; },
          [](const Unary& unary) -> Expr::Node {
            Expr operand = normalize(*unary.operand);
            if (unary.op == UnaryOp::Neg) {
              if (const auto* lit = std::get_if<IntLit>(&operand.node)) {
                return IntLit{canonical_int(lit->text.front() == '-' ? lit->text.substr(1)
                                                                     : "-" + lit->text)};
              }
              if (const auto* lit = std::get_if<RealLit>(&operand.node)) {
                return RealLit{negate_real(lit->text)};
              }
            }
            return Unary{unary.op, std::move(operand)};
          },
          [](const Binary& binary) -> Expr::Node {
            return Binary{binary.op, normalize(*binary.lhs), normalize(*binary.rhs)};
          },
          [](const Ternary& t) -> Expr::Node {
            return Ternary{normalize(*t.cond), normalize(*t.then_expr), normalize(*t.else_expr)};
          },
          [](const Transpose& t) -> Expr::Node { return Transpose{normalize(*t.operand)}; },
          [](const Range& range) -> Expr::Node {
            Range out;
            if (range.lower) out.lower.emplace(normalize(**range.lower));
            if (range.upper) out.upper.emplace(normalize(**range.upper));
            return out;
          },
      },
      node);
}

Stmt::Node normalize_stmt_node(const Stmt::Node& node) {
  return std::visit(
      Overloaded{
          [](const Declare& d) -> Stmt::Node {
            return Declare{normalize_decl(d.decl), normalize_opt(d.init)};
          },
          [](const Assign& a) -> Stmt::Node {
            return Assign{normalize(a.lhs), a.op, normalize(a.rhs)};
          },
          [](const Sample& s) -> Stmt::Node {
            return Sample{normalize(s.lhs), normalize_dist(s.dist)};
          },
          [](const TargetIncrement& t) -> Stmt::Node {
            return TargetIncrement{normalize(t.value)};
          },
          [](const For& f) -> Stmt::Node {
            return For{f.var, normalize(f.lower), normalize(f.upper), normalize_body(f.body)};
          },
          [](const While& w) -> Stmt::Node {
            return While{normalize(w.cond), normalize_body(w.body)};
          },
          [](const If& i) -> Stmt::Node {
            If out{normalize(i.cond), normalize_body(i.then_body), std::nullopt};
            if (i.else_body && !i.else_body->empty()) out.else_body = normalize_body(*i.else_body);
            return out;
          },
          [](const Break& b) -> Stmt::Node { return b; },
          [](const Continue& c) -> Stmt::Node { return c; },
          [](const Print& p) -> Stmt::Node { return Print{normalize_all(p.args)}; },
          [](const Reject& r) -> Stmt::Node { return Reject{normalize_all(r.args)}; },
          [](const LocalBlock& b) -> Stmt::Node { return LocalBlock{normalize_body(b.body)}; },
          [](const Return& r) -> Stmt::Node { return Return{normalize_opt(r.value)}; },
          [](const CallStmt& c) -> Stmt::Node {
            return CallStmt{Call{c.call.name, normalize_all(c.call.args)}};
          },
      },
      node);
}

}  // namespace

Expr normalize(const Expr& expr) { return Expr{normalize_node(expr.node), std::nullopt}; }

Stmt normalize(const Stmt& stmt) { return Stmt{normalize_stmt_node(stmt.node), std::nullopt}; }

Program normalize(const Program& program) {
  Program out;
  if (program.functions && !program.functions->empty()) {
    out.functions.emplace();
    for (const auto& fn : *program.functions) {
      out.functions->push_back(
          FunctionDef{fn.name, fn.return_type, fn.params, normalize_body(fn.body), std::nullopt});
    }
  }
  for (const auto& [kind, body] : program.blocks) {
    if (kind == BlockKind::Functions || body.empty()) continue;
    out.blocks.emplace(kind, normalize_body(body));
  }
  return out;
}

bool ast_equal(const Program& a, const Program& b) { return normalize(a) == normalize(b); }

}  // namespace yaps
