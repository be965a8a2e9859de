#include "yaps/free_vars.hpp"

namespace yaps {

namespace {

class Collector {
 public:
  std::set<std::string> result;

  void expr(const Expr& e) {
    std::visit(Overloaded{
                   [](const IntLit&) {},
                   [](const RealLit&) {},
                   [](const StringLit&) {},
                   [this](const Var& v) { read(v.name); },
                   [this](const Index& i) {
                     expr(*i.base);
                     for (const auto& idx : i.indices) expr(idx);
                   },
                   [this](const Call& c) {
                     for (const auto& a : c.args) expr(a);
                   },
                   [this](const Unary& u) { expr(*u.operand); },
                   [this](const Binary& b) {
                     expr(*b.lhs);
                     expr(*b.rhs);
                   },
                   [this](const Ternary& t) {
                     expr(*t.cond);
                     expr(*t.then_expr);
                     expr(*t.else_expr);
                   },
                   [this](const Transpose& t) { expr(*t.operand); },
                   [this](const Range& r) {
                     if (r.lower) expr(**r.lower);
                     if (r.upper) expr(**r.upper);
                   },
               },
               e.node);
  }

  void type(const StanType& t) {
    if (t.lower) expr(*t.lower);
    if (t.upper) expr(*t.upper);
    for (const auto& d : t.type_dims) expr(d);
    for (const auto& d : t.array_dims) expr(d);
  }

  void dist(const DistCall& d) {
    for (const auto& a : d.args) expr(a);
    if (d.truncation) {
      if (d.truncation->lower) expr(*d.truncation->lower);
      if (d.truncation->upper) expr(*d.truncation->upper);
    }
  }

  // Index expressions of an lvalue are read even when the base is written.
  void lvalue_indices(const Expr& e) {
    if (const auto* i = std::get_if<Index>(&e.node)) {
      lvalue_indices(*i->base);
      for (const auto& idx : i->indices) expr(idx);
    }
  }

  void body(const std::vector<Stmt>& stmts) {
    scopes_.emplace_back();
    for (const auto& s : stmts) stmt(s);
    scopes_.pop_back();
  }

  void stmt(const Stmt& s) {
    std::visit(Overloaded{
                   [this](const Declare& d) {
                     type(d.decl.type);
                     if (d.init) expr(*d.init);
                     bind(d.decl.name);
                   },
                   [this](const Assign& a) {
                     if (a.op == AssignOp::Set) {
                       lvalue_indices(a.lhs);
                     } else {
                       expr(a.lhs);
                     }
                     expr(a.rhs);
                   },
                   [this](const Sample& s) {
                     expr(s.lhs);
                     dist(s.dist);
                   },
                   [this](const TargetIncrement& t) { expr(t.value); },
                   [this](const For& f) {
                     expr(f.lower);
                     expr(f.upper);
                     scopes_.push_back({f.var});
                     body(f.body);
                     scopes_.pop_back();
                   },
                   [this](const While& w) {
                     expr(w.cond);
                     body(w.body);
                   },
                   [this](const If& i) {
                     expr(i.cond);
                     body(i.then_body);
                     if (i.else_body) body(*i.else_body);
                   },
                   [](const Break&) {},
                   [](const Continue&) {},
                   [this](const Print& p) {
                     for (const auto& a : p.args) expr(a);
                   },
                   [this](const Reject& r) {
                     for (const auto& a : r.args) expr(a);
                   },
                   [this](const LocalBlock& b) { body(b.body); },
                   [this](const Return& r) {
                     if (r.value) expr(*r.value);
                   },
                   [this](const CallStmt& c) {
                     for (const auto& a : c.call.args) expr(a);
                   },
               },
               s.node);
  }

 private:
  std::vector<std::set<std::string>> scopes_;

  void read(const std::string& name) {
    for (const auto& scope : scopes_) {
      if (scope.contains(name)) return;
    }
    result.insert(name);
  }

  void bind(const std::string& name) {
    if (!scopes_.empty()) scopes_.back().insert(name);
  }
};

}  // namespace

std::set<std::string> free_vars(const Expr& expr) {
  Collector c;
  c.expr(expr);
  return std::move(c.result);
}

std::set<std::string> free_vars(const Stmt& stmt) {
  Collector c;
  c.stmt(stmt);
  return std::move(c.result);
}

std::set<std::string> free_vars(const std::vector<Stmt>& stmts) {
  Collector c;
  c.body(stmts);
  return std::move(c.result);
}

std::set<std::string> free_vars(const DistCall& dist) {
  Collector c;
  c.dist(dist);
  return std::move(c.result);
}

}  // namespace yaps
