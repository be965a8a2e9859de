#include "yaps/yaps_emitter.hpp"

#include <set>

#include "expr_format.hpp"
#include "yaps/builtins.hpp"
#include "yaps/lower.hpp"

namespace yaps {

namespace {

using detail::format_expr;
using detail::Syntax;

std::string ex(const Expr& e, int min_prec = detail::kPrecTernary) {
  return format_expr(e, Syntax::Yaps, min_prec);
}

std::string expr_list(const std::vector<Expr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += ex(items[i]);
  }
  return out;
}

std::string type_text(const StanType& t) {
  std::string out(base_type_name(t.base));
  std::vector<std::string> args;
  for (const auto& d : t.type_dims) args.push_back(ex(d));
  if (t.lower) args.push_back("lower=" + ex(*t.lower));
  if (t.upper) args.push_back("upper=" + ex(*t.upper));
  if (!args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i > 0 ? ", " : "") + args[i];
    out += ")";
  }
  if (!t.array_dims.empty()) out += "[" + expr_list(t.array_dims) + "]";
  return out;
}

std::string arg_type_text(const ArgType& type) {
  std::string out(base_type_name(type.base));
  if (type.array_rank > 0) out += "[" + std::string(type.array_rank - 1, ',') + "]";
  return out;
}

// Collects identifiers the surface syntax cannot spell.
class KeywordScan {
 public:
  Diagnostics diags;

  void name(const std::string& n, const Span& span) {
    if (is_surface_keyword(n) && reported_.insert(n).second) {
      diags.push_back(Diagnostic::error(
          codes::kKeywordClash,
          "identifier " + n + " is a keyword of the surface language and cannot be translated",
          span));
    }
  }

  void expr(const Expr& e) {
    std::visit(Overloaded{
                   [&](const Var& v) { name(v.name, e.span); },
                   [&](const Index& ix) {
                     expr(*ix.base);
                     for (const auto& i : ix.indices) expr(i);
                   },
                   [&](const Call& c) {
                     name(c.name, e.span);
                     for (const auto& a : c.args) expr(a);
                   },
                   [&](const Unary& u) { expr(*u.operand); },
                   [&](const Binary& b) {
                     expr(*b.lhs);
                     expr(*b.rhs);
                   },
                   [&](const Ternary& t) {
                     expr(*t.cond);
                     expr(*t.then_expr);
                     expr(*t.else_expr);
                   },
                   [&](const Transpose& t) { expr(*t.operand); },
                   [&](const Range& r) {
                     if (r.lower) expr(**r.lower);
                     if (r.upper) expr(**r.upper);
                   },
                   [](const auto&) {},
               },
               e.node);
  }

  void type(const StanType& t) {
    if (t.lower) expr(*t.lower);
    if (t.upper) expr(*t.upper);
    for (const auto& d : t.type_dims) expr(d);
    for (const auto& d : t.array_dims) expr(d);
  }

  void stmts(const std::vector<Stmt>& body) {
    for (const auto& s : body) stmt(s);
  }

  void stmt(const Stmt& s) {
    std::visit(Overloaded{
                   [&](const Declare& d) {
                     name(d.decl.name, d.decl.span);
                     type(d.decl.type);
                     if (d.init) expr(*d.init);
                   },
                   [&](const Assign& a) {
                     expr(a.lhs);
                     expr(a.rhs);
                   },
                   [&](const Sample& smp) {
                     expr(smp.lhs);
                     name(smp.dist.name, s.span);
                     for (const auto& a : smp.dist.args) expr(a);
                     if (smp.dist.truncation) {
                       if (smp.dist.truncation->lower) expr(*smp.dist.truncation->lower);
                       if (smp.dist.truncation->upper) expr(*smp.dist.truncation->upper);
                     }
                   },
                   [&](const TargetIncrement& t) { expr(t.value); },
                   [&](const For& f) {
                     name(f.var, s.span);
                     expr(f.lower);
                     expr(f.upper);
                     stmts(f.body);
                   },
                   [&](const While& w) {
                     expr(w.cond);
                     stmts(w.body);
                   },
                   [&](const If& i) {
                     expr(i.cond);
                     stmts(i.then_body);
                     if (i.else_body) stmts(*i.else_body);
                   },
                   [&](const Print& p) {
                     for (const auto& a : p.args) expr(a);
                   },
                   [&](const Reject& r) {
                     for (const auto& a : r.args) expr(a);
                   },
                   [&](const LocalBlock& b) { stmts(b.body); },
                   [&](const Return& r) {
                     if (r.value) expr(*r.value);
                   },
                   [&](const CallStmt& c) { expr(Expr{c.call, s.span}); },
                   [](const auto&) {},
               },
               s.node);
  }

  void function(const FunctionDef& fn) {
    name(fn.name, fn.span);
    for (const auto& p : fn.params) name(p.name, fn.span);
    stmts(fn.body);
  }

 private:
  std::set<std::string> reported_;
};

class YapsEmitter {
 public:
  std::string run(const Program& program, const std::string& model_name) {
    raw("import yaps");
    raw("");
    raw("");
    raw("@yaps.model");

    const std::vector<Stmt>* data = program.block(BlockKind::Data);
    bool data_as_formals = true;
    if (data) {
      for (const auto& s : *data) {
        const auto* d = std::get_if<Declare>(&s.node);
        if (!d || d->init) data_as_formals = false;
      }
    }
    std::string header = "def " + model_name + "(";
    if (data && data_as_formals) {
      for (std::size_t i = 0; i < data->size(); ++i) {
        const auto& d = std::get<Declare>((*data)[i].node);
        if (i > 0) header += ", ";
        header += d.decl.name + ": " + type_text(d.decl.type);
      }
    }
    raw(header + "):");
    ++depth_;
    const std::size_t before = out_.size();

    if (program.functions && !program.functions->empty()) {
      line("with functions:");
      ++depth_;
      for (const auto& fn : *program.functions) function(fn);
      --depth_;
    }
    for (const auto& [kind, body] : program.blocks) {
      if (kind == BlockKind::Data && data_as_formals) continue;
      line("with " + std::string(block_surface_name(kind)) + ":");
      suite(body);
    }
    if (out_.size() == before) line("pass");
    return std::move(out_);
  }

 private:
  std::string out_;
  int depth_ = 0;

  void raw(const std::string& text) { out_ += text + "\n"; }
  void line(const std::string& text) {
    out_ += std::string(static_cast<std::size_t>(depth_) * 4, ' ') + text + "\n";
  }

  void suite(const std::vector<Stmt>& body) {
    ++depth_;
    if (body.empty()) line("pass");
    for (const auto& s : body) statement(s);
    --depth_;
  }

  void function(const FunctionDef& fn) {
    std::string header = "def " + fn.name + "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i > 0) header += ", ";
      header += fn.params[i].name + ": " + arg_type_text(fn.params[i].type);
    }
    header += ")";
    if (fn.return_type) header += " -> " + arg_type_text(*fn.return_type);
    line(header + ":");
    suite(fn.body);
  }

  static std::string dist_text(const DistCall& d) {
    std::string out = d.name + "(" + expr_list(d.args) + ")";
    if (d.truncation) {
      const auto& t = *d.truncation;
      if (t.lower && t.upper) {
        out += ".T[" + ex(*t.lower) + ", " + ex(*t.upper) + "]";
      } else if (t.lower) {
        out += ".T[" + ex(*t.lower) + ":]";
      } else if (t.upper) {
        out += ".T[:" + ex(*t.upper) + "]";
      }
    }
    return out;
  }

  void if_chain(const If& node, const std::string& keyword) {
    line(keyword + " " + ex(node.cond) + ":");
    suite(node.then_body);
    if (!node.else_body) return;
    const auto& else_body = *node.else_body;
    if (else_body.size() == 1) {
      if (const auto* nested = std::get_if<If>(&else_body.front().node)) {
        if_chain(*nested, "elif");
        return;
      }
    }
    line("else:");
    suite(else_body);
  }

  void statement(const Stmt& s) {
    std::visit(
        Overloaded{
            [&](const Declare& d) {
              std::string text = d.decl.name + ": " + type_text(d.decl.type);
              if (d.init) text += " = " + ex(*d.init);
              line(text);
            },
            [&](const Assign& a) {
              line(ex(a.lhs) + " " + std::string(assign_op_text(a.op)) + " " + ex(a.rhs));
            },
            [&](const Sample& smp) { line(ex(smp.lhs) + " <~ " + dist_text(smp.dist)); },
            [&](const TargetIncrement& t) { line("target += " + ex(t.value)); },
            [&](const For& f) {
              line("for " + f.var + " in range(" + ex(f.lower) + ", " +
                   ex(exclusive_upper(f.upper)) + "):");
              suite(f.body);
            },
            [&](const While& w) {
              line("while " + ex(w.cond) + ":");
              suite(w.body);
            },
            [&](const If& i) { if_chain(i, "if"); },
            [&](const Break&) { line("break"); },
            [&](const Continue&) { line("continue"); },
            [&](const Print& p) { line("print(" + expr_list(p.args) + ")"); },
            [&](const Reject& r) { line("reject(" + expr_list(r.args) + ")"); },
            [&](const LocalBlock& b) {
              line("with block:");
              suite(b.body);
            },
            [&](const Return& r) { line(r.value ? "return " + ex(*r.value) : std::string("return")); },
            [&](const CallStmt& c) { line(ex(Expr{c.call, std::nullopt})); },
        },
        s.node);
  }
};

}  // namespace

YapsEmitResult emit_yaps(const Program& program, const std::string& model_name) {
  KeywordScan scan;
  if (program.functions) {
    for (const auto& fn : *program.functions) scan.function(fn);
  }
  for (const auto& [kind, body] : program.blocks) scan.stmts(body);
  YapsEmitResult result;
  result.diagnostics = std::move(scan.diags);
  if (!has_errors(result.diagnostics)) result.text = YapsEmitter().run(program, model_name);
  return result;
}

}  // namespace yaps
