#include "yaps/block_inference.hpp"

#include <set>

#include "yaps/free_vars.hpp"

namespace yaps {

namespace {

using Names = std::set<std::string>;

void merge(Names& into, const Names& from) { into.insert(from.begin(), from.end()); }

class Inference {
 public:
  explicit Inference(const UnplacedModel& model) : model_(model) {}

  BlockInferenceResult run() {
    for (const auto& f : model_.formals) {
      formals_.insert(std::get<Declare>(f.node).decl.name);
    }
    std::vector<const Stmt*> top;
    for (const auto& u : model_.body) {
      if (const auto* s = std::get_if<Stmt>(&u)) {
        top.push_back(s);
        if (const auto* d = std::get_if<Declare>(&s->node)) {
          if (!formals_.contains(d->decl.name)) globals_.insert(d->decl.name);
        }
      }
    }
    for (const Stmt* s : top) walk(*s, {}, true);
    classify();

    BlockInferenceResult result;
    auto& data = result.program.blocks[BlockKind::Data];
    for (const auto& f : model_.formals) data.push_back(f);
    std::vector<FunctionDef> functions;
    for (const auto& u : model_.body) {
      if (const auto* fn = std::get_if<FunctionDef>(&u)) {
        functions.push_back(*fn);
        continue;
      }
      const Stmt& s = std::get<Stmt>(u);
      if (auto block = place(s)) {
        if (*block == BlockKind::Model) check_model_reads(s);
        result.program.blocks[*block].push_back(s);
      }
    }
    if (!functions.empty()) result.program.functions = std::move(functions);

    for (const auto& name : formals_) result.classes[name] = VarClass::DataVar;
    for (const auto& name : locals_) {
      if (!globals_.contains(name) && !formals_.contains(name)) {
        result.classes[name] = VarClass::LocalVar;
      }
    }
    for (const auto& [name, cls] : classes_) result.classes[name] = cls;
    result.diagnostics = std::move(diags_);
    sort_diagnostics(result.diagnostics);
    return result;
  }

 private:
  const UnplacedModel& model_;
  Names formals_;
  Names globals_;
  Names locals_;
  Names assigned_;
  Names sampled_;
  Names model_reads_;
  std::map<std::string, Names> deps_;
  std::map<std::string, Span> sample_span_;
  std::map<std::string, Span> assign_span_;
  std::map<std::string, VarClass> classes_;
  Diagnostics diags_;

  void note_assign(const std::string& name, const Names& reads, const Names& context,
                   const Span& span) {
    assigned_.insert(name);
    assign_span_.try_emplace(name, span);
    merge(deps_[name], reads);
    merge(deps_[name], context);
  }

  void walk_all(const std::vector<Stmt>& stmts, const Names& context) {
    for (const auto& s : stmts) walk(s, context, false);
  }

  void walk(const Stmt& s, const Names& context, bool top_level) {
    std::visit(Overloaded{
                   [&](const Declare& d) {
                     if (!top_level) locals_.insert(d.decl.name);
                     if (d.init) note_assign(d.decl.name, free_vars(*d.init), context, s.span);
                   },
                   [&](const Assign& a) {
                     if (auto base = lvalue_base(a.lhs)) {
                       note_assign(*base, free_vars(s), context, s.span);
                     }
                   },
                   [&](const Sample& smp) {
                     if (auto base = lvalue_base(smp.lhs)) {
                       sampled_.insert(*base);
                       sample_span_.try_emplace(*base, s.span);
                     }
                     merge(model_reads_, free_vars(s));
                     merge(model_reads_, context);
                   },
                   [&](const TargetIncrement& t) {
                     merge(model_reads_, free_vars(t.value));
                     merge(model_reads_, context);
                   },
                   [&](const For& f) {
                     Names inner = context;
                     merge(inner, free_vars(f.lower));
                     merge(inner, free_vars(f.upper));
                     locals_.insert(f.var);
                     walk_all(f.body, inner);
                   },
                   [&](const While& w) {
                     Names inner = context;
                     merge(inner, free_vars(w.cond));
                     walk_all(w.body, inner);
                   },
                   [&](const If& i) {
                     Names inner = context;
                     merge(inner, free_vars(i.cond));
                     walk_all(i.then_body, inner);
                     if (i.else_body) walk_all(*i.else_body, inner);
                   },
                   [&](const LocalBlock& b) { walk_all(b.body, context); },
                   [](const auto&) {},
               },
               s.node);
  }

  bool depends_on_params(const std::string& name) const {
    Names seen;
    std::vector<std::string> stack{name};
    while (!stack.empty()) {
      const std::string cur = stack.back();
      stack.pop_back();
      auto it = deps_.find(cur);
      if (it == deps_.end()) continue;
      for (const auto& d : it->second) {
        if (!seen.insert(d).second) continue;
        if (globals_.contains(d) && !assigned_.contains(d)) return true;
        stack.push_back(d);
      }
    }
    return false;
  }

  void classify() {
    for (const auto& name : formals_) {
      if (assigned_.contains(name)) {
        diags_.push_back(
            Diagnostic::error(codes::kConflictingRoles,
                              "conflicting roles: data variable " + name + " is assigned",
                              assign_span_[name]));
      }
    }
    Names param_dependent;
    for (const auto& name : globals_) {
      if (sampled_.contains(name) && assigned_.contains(name)) {
        Diagnostic d = Diagnostic::error(
            codes::kConflictingRoles,
            "conflicting roles: variable " + name + " is both sampled and assigned",
            sample_span_[name]);
        d.note("assigned here", assign_span_[name]);
        diags_.push_back(std::move(d));
      }
      if (!assigned_.contains(name)) {
        classes_[name] = VarClass::ParamVar;
      } else if (depends_on_params(name)) {
        param_dependent.insert(name);
      } else {
        classes_[name] = VarClass::TransformedDataVar;
      }
    }

    // Whatever the model reads, directly or through locals and transformed
    // parameters, must be computed before the model block.
    Names reads = model_reads_;
    std::vector<std::string> work(reads.begin(), reads.end());
    while (!work.empty()) {
      const std::string cur = work.back();
      work.pop_back();
      const bool expands = param_dependent.contains(cur) ||
                           (locals_.contains(cur) && !globals_.contains(cur));
      if (!expands) continue;
      for (const auto& d : deps_[cur]) {
        if (reads.insert(d).second) work.push_back(d);
      }
    }
    for (const auto& name : param_dependent) {
      classes_[name] =
          reads.contains(name) ? VarClass::TransformedParamVar : VarClass::GenQuantVar;
    }
  }

  std::optional<BlockKind> block_of_var(const std::string& name) const {
    if (formals_.contains(name)) return BlockKind::Data;
    auto it = classes_.find(name);
    if (it == classes_.end()) return std::nullopt;
    switch (it->second) {
      case VarClass::DataVar: return BlockKind::Data;
      case VarClass::TransformedDataVar: return BlockKind::TransformedData;
      case VarClass::ParamVar: return BlockKind::Parameters;
      case VarClass::TransformedParamVar: return BlockKind::TransformedParameters;
      case VarClass::GenQuantVar: return BlockKind::GeneratedQuantities;
      case VarClass::LocalVar: return std::nullopt;
    }
    return std::nullopt;
  }

  // Blocks demanded by the classified statements nested in `s`.
  void demanded(const Stmt& s, std::set<BlockKind>& out, const Names& shadowed) const {
    auto nested = [&](const std::vector<Stmt>& body, Names inner) {
      for (const auto& b : body) {
        demanded(b, out, inner);
        if (const auto* d = std::get_if<Declare>(&b.node)) inner.insert(d->decl.name);
      }
    };
    std::visit(Overloaded{
                   [&](const Assign& a) {
                     auto base = lvalue_base(a.lhs);
                     if (base && !shadowed.contains(*base)) {
                       if (auto b = block_of_var(*base)) out.insert(*b);
                     }
                   },
                   [&](const Sample&) { out.insert(BlockKind::Model); },
                   [&](const TargetIncrement&) { out.insert(BlockKind::Model); },
                   [&](const For& f) {
                     Names inner = shadowed;
                     inner.insert(f.var);
                     nested(f.body, inner);
                   },
                   [&](const While& w) { nested(w.body, shadowed); },
                   [&](const If& i) {
                     nested(i.then_body, shadowed);
                     if (i.else_body) nested(*i.else_body, shadowed);
                   },
                   [&](const LocalBlock& b) { nested(b.body, shadowed); },
                   [](const auto&) {},
               },
               s.node);
  }

  std::optional<BlockKind> place(const Stmt& s) {
    if (const auto* d = std::get_if<Declare>(&s.node)) return block_of_var(d->decl.name);
    std::set<BlockKind> blocks;
    demanded(s, blocks, {});
    if (blocks.size() == 1) return *blocks.begin();
    if (blocks.size() > 1) {
      std::string names;
      for (BlockKind b : blocks) {
        if (!names.empty()) names += ", ";
        names += block_stan_name(b);
      }
      diags_.push_back(Diagnostic::error(
          codes::kAmbiguousBlock,
          "ambiguous block: statement mixes code for blocks " + names +
              "; split it into separate statements",
          s.span));
      return BlockKind::Model;
    }
    // Nothing classified inside: decide by what the statement reads.
    bool reads_param = false;
    for (const auto& name : free_vars(s)) {
      auto b = block_of_var(name);
      if (b == BlockKind::GeneratedQuantities) return BlockKind::GeneratedQuantities;
      if (b == BlockKind::Parameters || b == BlockKind::TransformedParameters) reads_param = true;
    }
    return reads_param ? BlockKind::Model : BlockKind::TransformedData;
  }

  void check_model_reads(const Stmt& s) {
    for (const auto& name : free_vars(s)) {
      if (block_of_var(name) == BlockKind::GeneratedQuantities) {
        diags_.push_back(Diagnostic::error(
            codes::kGenQuantInModel,
            "generated quantity " + name + " cannot be read in the model block", s.span));
      }
    }
  }
};

}  // namespace

std::string_view var_class_name(VarClass cls) {
  switch (cls) {
    case VarClass::DataVar: return "data";
    case VarClass::TransformedDataVar: return "transformed data";
    case VarClass::ParamVar: return "parameter";
    case VarClass::TransformedParamVar: return "transformed parameter";
    case VarClass::GenQuantVar: return "generated quantity";
    case VarClass::LocalVar: return "local";
  }
  return "";
}

BlockInferenceResult infer_blocks(const UnplacedModel& model) { return Inference(model).run(); }

}  // namespace yaps
