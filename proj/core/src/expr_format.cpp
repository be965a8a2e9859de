#include "expr_format.hpp"

#include "yaps/builtins.hpp"

namespace yaps::detail {

namespace {

struct Formatted {
  std::string text;
  int prec;
};

struct OpInfo {
  int prec;
  std::string_view stan;
  std::string_view yaps;
};

OpInfo op_info(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return {2, "||", "or"};
    case BinaryOp::And: return {3, "&&", "and"};
    case BinaryOp::Eq: return {4, "==", "=="};
    case BinaryOp::Neq: return {4, "!=", "!="};
    case BinaryOp::Lt: return {5, "<", "<"};
    case BinaryOp::Leq: return {5, "<=", "<="};
    case BinaryOp::Gt: return {5, ">", ">"};
    case BinaryOp::Geq: return {5, ">=", ">="};
    case BinaryOp::Add: return {6, "+", "+"};
    case BinaryOp::Sub: return {6, "-", "-"};
    case BinaryOp::Mul: return {7, "*", "*"};
    case BinaryOp::Div: return {7, "/", "/"};
    case BinaryOp::Mod: return {7, "%", "%"};
    case BinaryOp::IntDiv: return {7, "%/%", "//"};
    case BinaryOp::LeftDiv: return {8, "\\", "\\"};
    case BinaryOp::EltMul: return {9, ".*", ".*"};
    case BinaryOp::EltDiv: return {9, "./", "./"};
    case BinaryOp::Pow: return {11, "^", "**"};
  }
  return {0, "", ""};
}

bool is_comparison(BinaryOp op) {
  return op == BinaryOp::Eq || op == BinaryOp::Neq || op == BinaryOp::Lt ||
         op == BinaryOp::Leq || op == BinaryOp::Gt || op == BinaryOp::Geq;
}

class Printer {
 public:
  explicit Printer(Syntax syntax) : syntax_(syntax) {}

  std::string at_least(const Expr& e, int min_prec) {
    Formatted f = format(e);
    if (f.prec < min_prec) return "(" + f.text + ")";
    return f.text;
  }

  Formatted format(const Expr& e) {
    return std::visit(
        Overloaded{
            [](const IntLit& lit) { return literal(lit.text); },
            [](const RealLit& lit) { return literal(lit.text); },
            [](const StringLit& s) { return Formatted{"\"" + s.value + "\"", kPrecPrimary}; },
            [](const Var& v) { return Formatted{v.name, kPrecPrimary}; },
            [&](const Index& ix) {
              std::string out = at_least(*ix.base, kPrecPostfix) + "[";
              for (std::size_t i = 0; i < ix.indices.size(); ++i) {
                if (i > 0) out += ", ";
                out += index(ix.indices[i]);
              }
              return Formatted{out + "]", kPrecPostfix};
            },
            [&](const Call& call) { return Formatted{call_text(call), kPrecPrimary}; },
            [&](const Unary& u) { return unary(u); },
            [&](const Binary& b) { return binary(b); },
            [&](const Ternary& t) {
              if (syntax_ == Syntax::Stan) {
                return Formatted{at_least(*t.cond, kPrecOr) + " ? " +
                                     at_least(*t.then_expr, kPrecTernary) + " : " +
                                     at_least(*t.else_expr, kPrecTernary),
                                 kPrecTernary};
              }
              return Formatted{at_least(*t.then_expr, kPrecOr) + " if " +
                                   at_least(*t.cond, kPrecOr) + " else " +
                                   at_least(*t.else_expr, kPrecTernary),
                               kPrecTernary};
            },
            [&](const Transpose& t) {
              if (syntax_ == Syntax::Stan) {
                return Formatted{at_least(*t.operand, kPrecPostfix) + "'", kPrecPostfix};
              }
              const bool literal_operand = std::holds_alternative<IntLit>(t.operand->node) ||
                                           std::holds_alternative<RealLit>(t.operand->node);
              const std::string inner = literal_operand
                                            ? "(" + format(*t.operand).text + ")"
                                            : at_least(*t.operand, kPrecPostfix);
              return Formatted{inner + ".T", kPrecPostfix};
            },
            [&](const Range&) { return Formatted{index(e), kPrecTernary}; },
        },
        e.node);
  }

 private:
  Syntax syntax_;

  static Formatted literal(const std::string& text) {
    const bool signed_text = !text.empty() && (text.front() == '-' || text.front() == '+');
    return Formatted{text, signed_text ? kPrecUnary : kPrecPrimary};
  }

  std::string index(const Expr& e) {
    const auto* r = std::get_if<Range>(&e.node);
    if (!r) return at_least(e, kPrecTernary);
    std::string out;
    if (r->lower) out += at_least(**r->lower, kPrecOr);
    out += ":";
    if (r->upper) out += at_least(**r->upper, kPrecOr);
    return out;
  }

  std::string call_text(const Call& call) {
    std::string out = call.name + "(";
    const bool bar = uses_conditional_bar(call.name) && call.args.size() >= 2;
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      if (i > 0) out += (i == 1 && bar) ? " | " : ", ";
      out += at_least(call.args[i], kPrecTernary);
    }
    return out + ")";
  }

  Formatted unary(const Unary& u) {
    if (u.op == UnaryOp::Not && syntax_ == Syntax::Yaps) {
      return Formatted{"not " + at_least(*u.operand, 4), 4};
    }
    std::string operand = at_least(*u.operand, kPrecUnary);
    if (!operand.empty() && (operand.front() == '-' || operand.front() == '+' ||
                             operand.front() == '!')) {
      operand = "(" + operand + ")";
    }
    return Formatted{std::string(unary_op_stan(u.op)) + operand, kPrecUnary};
  }

  Formatted binary(const Binary& b) {
    const OpInfo info = op_info(b.op);
    const std::string_view op = syntax_ == Syntax::Stan ? info.stan : info.yaps;
    int lhs_min = info.prec;
    int rhs_min = info.prec + 1;
    int prec = info.prec;
    if (b.op == BinaryOp::Pow) {
      lhs_min = kPrecPostfix;
      rhs_min = info.prec;
    } else if (syntax_ == Syntax::Yaps && is_comparison(b.op)) {
      // Comparisons share one non-associative level in the surface syntax.
      prec = 5;
      lhs_min = rhs_min = kPrecAdditive;
    }
    return Formatted{at_least(*b.lhs, lhs_min) + " " + std::string(op) + " " +
                         at_least(*b.rhs, rhs_min),
                     prec};
  }
};

}  // namespace

std::string format_expr(const Expr& expr, Syntax syntax, int min_prec) {
  return Printer(syntax).at_least(expr, min_prec);
}

}  // namespace yaps::detail
