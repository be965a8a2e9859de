#include "yaps/scope_check.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace yaps {

namespace {

struct Variable {
  std::string name;
  Span span;
  bool reportable = true;
  bool used = false;
};

class ScopeChecker {
 public:
  ScopeChecker(const SurfaceModel& model, const Builtins& builtins)
      : model_(model), builtins_(builtins) {}

  Diagnostics run() {
    collect_functions();

    // Formal argument types see every formal and every dependent variable.
    push();
    for (const auto& dep : model_.dependent_vars) declare(dep.name, dep.span, false);
    for (const auto& formal : model_.formal_args) declare(formal.decl.name, formal.decl.span, false);
    for (const auto& formal : model_.formal_args) check_type(formal.decl.type);
    std::set<std::string> read_in_types;
    for (const auto& [name, index] : scopes_.back()) {
      if (vars_[index].used) read_in_types.insert(name);
    }
    pop(false);

    push();
    for (const auto& formal : model_.formal_args) {
      declare(formal.decl.name, formal.decl.span, true);
      if (read_in_types.contains(formal.decl.name)) vars_.back().used = true;
    }
    if (model_.explicit_blocks) {
      for (const auto& stmt : model_.body) surface(stmt);
      for (BlockKind kind : kAllBlocks) {
        for (const auto& block : *model_.explicit_blocks) {
          if (block.kind != kind) continue;
          const bool local = kind == BlockKind::Model;
          if (local) push();
          for (const auto& stmt : block.body) surface(stmt);
          if (local) pop(true);
        }
      }
    } else {
      for (const auto& stmt : model_.body) surface(stmt);
    }
    pop(true);

    sort_diagnostics(diags_);
    return std::move(diags_);
  }

 private:
  const SurfaceModel& model_;
  const Builtins& builtins_;
  std::vector<Variable> vars_;
  std::vector<std::map<std::string, std::size_t>> scopes_;
  std::set<std::string> functions_;
  Diagnostics diags_;

  void collect_functions() {
    auto add = [&](const std::vector<SurfaceStmt>& body) {
      for (const auto& s : body) {
        if (const auto* fn = std::get_if<FunctionDef>(&s.node)) functions_.insert(fn->name);
      }
    };
    add(model_.body);
    if (model_.explicit_blocks) {
      for (const auto& block : *model_.explicit_blocks) add(block.body);
    }
  }

  void push() { scopes_.emplace_back(); }

  void pop(bool report) {
    if (report) {
      for (const auto& [name, index] : scopes_.back()) {
        const Variable& v = vars_[index];
        if (v.reportable && !v.used) {
          diags_.push_back(Diagnostic::warning(codes::kUnused, "unused variable " + v.name, v.span));
        }
      }
    }
    scopes_.pop_back();
  }

  void declare(const std::string& name, const Span& span, bool reportable) {
    vars_.push_back(Variable{name, span, reportable, false});
    scopes_.back()[name] = vars_.size() - 1;
  }

  Variable* lookup(const std::string& name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return &vars_[found->second];
    }
    return nullptr;
  }

  void use(const std::string& name, const Span& span) {
    if (Variable* v = lookup(name)) {
      v->used = true;
    } else {
      diags_.push_back(Diagnostic::error(codes::kUndefined, "undefined variable " + name, span));
    }
  }

  bool known_function(const std::string& name) const {
    if (builtins_.contains(name) || functions_.contains(name)) return true;
    const std::string_view stem = strip_distribution_suffix(name);
    return stem != name && functions_.contains(std::string(stem));
  }

  bool known_distribution(const std::string& name) const {
    if (builtins_.is_distribution(name)) return true;
    for (std::string_view suffix : {"_lpdf", "_lpmf", "_lupdf", "_lupmf", "_log"}) {
      if (functions_.contains(name + std::string(suffix))) return true;
    }
    return false;
  }

  void expr(const Expr& e) {
    std::visit(Overloaded{
                   [](const IntLit&) {},
                   [](const RealLit&) {},
                   [](const StringLit&) {},
                   [&](const Var& v) { use(v.name, e.span); },
                   [&](const Index& ix) {
                     expr(*ix.base);
                     for (const auto& i : ix.indices) expr(i);
                   },
                   [&](const Call& call) {
                     if (!known_function(call.name)) {
                       diags_.push_back(Diagnostic::warning(
                           codes::kUnknownFunction, "unknown function " + call.name, e.span));
                     }
                     for (const auto& a : call.args) expr(a);
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
               },
               e.node);
  }

  void check_type(const StanType& type) {
    if (type.lower) expr(*type.lower);
    if (type.upper) expr(*type.upper);
    for (const auto& d : type.type_dims) expr(d);
    for (const auto& d : type.array_dims) expr(d);
  }

  void dist(const DistCall& d, const Span& span) {
    if (!known_distribution(d.name)) {
      diags_.push_back(
          Diagnostic::warning(codes::kUnknownFunction, "unknown distribution " + d.name, span));
    }
    for (const auto& a : d.args) expr(a);
    if (d.truncation) {
      if (d.truncation->lower) expr(*d.truncation->lower);
      if (d.truncation->upper) expr(*d.truncation->upper);
    }
  }

  // Writing to `x[i]` reads `i`; `x` must be declared and counts as used.
  void assign_target(const Expr& lhs) {
    if (const auto* var = std::get_if<Var>(&lhs.node)) {
      Variable* v = lookup(var->name);
      if (!v) {
        diags_.push_back(
            Diagnostic::error(codes::kUndefined, "undefined variable " + var->name, lhs.span));
      } else {
        v->used = true;
      }
      return;
    }
    if (const auto* ix = std::get_if<Index>(&lhs.node)) {
      assign_target(*ix->base);
      for (const auto& i : ix->indices) expr(i);
      return;
    }
    expr(lhs);
  }

  void body(const std::vector<Stmt>& stmts) {
    push();
    for (const auto& s : stmts) stmt(s);
    pop(true);
  }

  void stmt(const Stmt& s) {
    std::visit(Overloaded{
                   [&](const Declare& d) {
                     check_type(d.decl.type);
                     if (d.init) expr(*d.init);
                     declare(d.decl.name, d.decl.span, true);
                     if (d.init) lookup(d.decl.name)->used = true;
                   },
                   [&](const Assign& a) {
                     expr(a.rhs);
                     assign_target(a.lhs);
                   },
                   [&](const Sample& smp) {
                     expr(smp.lhs);
                     dist(smp.dist, s.span);
                   },
                   [&](const TargetIncrement& t) { expr(t.value); },
                   [&](const For& f) {
                     expr(f.lower);
                     expr(f.upper);
                     push();
                     declare(f.var, s.span, false);
                     body(f.body);
                     pop(false);
                   },
                   [&](const While& w) {
                     expr(w.cond);
                     body(w.body);
                   },
                   [&](const If& i) {
                     expr(i.cond);
                     body(i.then_body);
                     if (i.else_body) body(*i.else_body);
                   },
                   [](const Break&) {},
                   [](const Continue&) {},
                   [&](const Print& p) {
                     for (const auto& a : p.args) expr(a);
                   },
                   [&](const Reject& r) {
                     for (const auto& a : r.args) expr(a);
                   },
                   [&](const LocalBlock& b) { body(b.body); },
                   [&](const Return& r) {
                     if (r.value) expr(*r.value);
                   },
                   [&](const CallStmt& c) { expr(Expr{c.call, s.span}); },
               },
               s.node);
  }

  void function(const FunctionDef& fn) {
    // Function bodies see their parameters only.
    auto saved = std::move(scopes_);
    scopes_.clear();
    push();
    for (const auto& p : fn.params) declare(p.name, fn.span, false);
    body(fn.body);
    pop(false);
    scopes_ = std::move(saved);
  }

  void surface(const SurfaceStmt& s) {
    std::visit(Overloaded{
                   [&](const Stmt& st) { stmt(st); },
                   [&](const AnnotatedSample& a) {
                     check_type(a.decl.type);
                     declare(a.decl.name, a.decl.span, true);
                     dist(a.dist, a.span);
                   },
                   [&](const FunctionDef& fn) { function(fn); },
               },
               s.node);
  }
};

}  // namespace

Diagnostics check_scopes(const SurfaceModel& model, const Builtins& builtins) {
  return ScopeChecker(model, builtins).run();
}

}  // namespace yaps
