#include "yaps/stan_emitter.hpp"

#include "expr_format.hpp"

namespace yaps {

namespace {

using detail::format_expr;
using detail::Syntax;

std::string ex(const Expr& e, int min_prec = detail::kPrecTernary) {
  return format_expr(e, Syntax::Stan, min_prec);
}

std::string expr_list(const std::vector<Expr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += ex(items[i]);
  }
  return out;
}

std::string arg_type_text(const ArgType& type) {
  std::string out(base_type_name(type.base));
  if (type.array_rank > 0) out += "[" + std::string(type.array_rank - 1, ',') + "]";
  return out;
}

class StanEmitter {
 public:
  EmitResult run(const Program& program) {
    if (program.functions) {
      open("functions {");
      for (const auto& fn : *program.functions) function(fn);
      close();
    }
    for (const auto& [kind, body] : program.blocks) {
      open(std::string(block_stan_name(kind)) + " {");
      statements(body);
      close();
    }
    return std::move(out_);
  }

 private:
  EmitResult out_;
  int line_ = 1;
  int depth_ = 0;

  void line(const std::string& text, const Span& source = std::nullopt) {
    const std::string indent(static_cast<std::size_t>(depth_) * 2, ' ');
    if (source) {
      const int start = static_cast<int>(indent.size()) + 1;
      out_.map.entries.push_back(
          SourceMapEntry{line_, start, start + static_cast<int>(text.size()), *source});
    }
    out_.text += indent + text + "\n";
    ++line_;
  }

  void open(const std::string& header, const Span& source = std::nullopt) {
    line(header, source);
    ++depth_;
  }

  void close(const std::string& text = "}") {
    --depth_;
    line(text);
  }

  void function(const FunctionDef& fn) {
    std::string header = fn.return_type ? arg_type_text(*fn.return_type) : "void";
    header += " " + fn.name + "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i > 0) header += ", ";
      header += arg_type_text(fn.params[i].type) + " " + fn.params[i].name;
    }
    open(header + ") {", fn.span);
    statements(fn.body);
    close();
  }

  void statements(const std::vector<Stmt>& body) {
    for (const auto& s : body) statement(s);
  }

  static std::string declaration(const Declare& d) {
    const StanType& t = d.decl.type;
    std::string out(base_type_name(t.base));
    if (t.lower || t.upper) {
      out += "<";
      if (t.lower) out += "lower=" + ex(*t.lower, detail::kPrecAdditive);
      if (t.lower && t.upper) out += ",";
      if (t.upper) out += "upper=" + ex(*t.upper, detail::kPrecAdditive);
      out += ">";
    }
    if (!t.type_dims.empty()) out += "[" + expr_list(t.type_dims) + "]";
    out += " " + d.decl.name;
    if (!t.array_dims.empty()) out += "[" + expr_list(t.array_dims) + "]";
    if (d.init) out += " = " + ex(*d.init);
    return out + ";";
  }

  static std::string dist_text(const DistCall& d) {
    std::string out = d.name + "(" + expr_list(d.args) + ")";
    if (d.truncation) {
      out += " T[";
      if (d.truncation->lower) out += ex(*d.truncation->lower);
      out += ", ";
      if (d.truncation->upper) out += ex(*d.truncation->upper);
      out += "]";
    }
    return out;
  }

  void if_chain(const If& node, const Span& span, const std::string& prefix) {
    open(prefix + "if (" + ex(node.cond) + ") {", span);
    statements(node.then_body);
    if (!node.else_body) {
      close();
      return;
    }
    const auto& else_body = *node.else_body;
    if (else_body.size() == 1) {
      if (const auto* nested = std::get_if<If>(&else_body.front().node)) {
        --depth_;
        if_chain(*nested, else_body.front().span, "} else ");
        return;
      }
    }
    --depth_;
    open("} else {");
    statements(else_body);
    close();
  }

  void statement(const Stmt& s) {
    std::visit(
        Overloaded{
            [&](const Declare& d) { line(declaration(d), s.span); },
            [&](const Assign& a) {
              line(ex(a.lhs) + " " + std::string(assign_op_text(a.op)) + " " + ex(a.rhs) + ";",
                   s.span);
            },
            [&](const Sample& smp) { line(ex(smp.lhs) + " ~ " + dist_text(smp.dist) + ";", s.span); },
            [&](const TargetIncrement& t) { line("target += " + ex(t.value) + ";", s.span); },
            [&](const For& f) {
              open("for (" + f.var + " in " + ex(f.lower, detail::kPrecOr) + " : " +
                       ex(f.upper) + ") {",
                   s.span);
              statements(f.body);
              close();
            },
            [&](const While& w) {
              open("while (" + ex(w.cond) + ") {", s.span);
              statements(w.body);
              close();
            },
            [&](const If& i) { if_chain(i, s.span, ""); },
            [&](const Break&) { line("break;", s.span); },
            [&](const Continue&) { line("continue;", s.span); },
            [&](const Print& p) { line("print(" + expr_list(p.args) + ");", s.span); },
            [&](const Reject& r) { line("reject(" + expr_list(r.args) + ");", s.span); },
            [&](const LocalBlock& b) {
              open("{", s.span);
              statements(b.body);
              close();
            },
            [&](const Return& r) {
              line(r.value ? "return " + ex(*r.value) + ";" : std::string("return;"), s.span);
            },
            [&](const CallStmt& c) { line(ex(Expr{c.call, std::nullopt}) + ";", s.span); },
        },
        s.node);
  }
};

}  // namespace

EmitResult emit_stan(const Program& program) { return StanEmitter().run(program); }

}  // namespace yaps
