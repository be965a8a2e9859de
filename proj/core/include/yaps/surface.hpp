#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "yaps/ir.hpp"

namespace yaps {

/// `theta: real(lower=0, upper=1) <~ uniform(0, 1)`: declaration and prior in
/// one statement. Only valid at the top level of a model or explicit block.
struct AnnotatedSample {
  Decl decl;
  DistCall dist;
  SourceSpan span;
};

struct SurfaceStmt {
  std::variant<Stmt, AnnotatedSample, FunctionDef> node;
};

/// `with parameters:` and friends.
struct ExplicitBlock {
  BlockKind kind;
  std::vector<SurfaceStmt> body;
  SourceSpan span;  // the `with` header
};

/// Typed formal argument of a model: an observed (data) variable.
struct FormalArg {
  Decl decl;         // decl.span covers the name
  SourceSpan span;   // the whole `name: type` text
};

/// Module-level `N = yaps.dependent_type_var()`.
struct DependentVar {
  std::string name;
  SourceSpan span;
};

struct SurfaceModel {
  std::string name;
  SourceSpan span;  // the `def` header
  std::vector<FormalArg> formal_args;
  std::vector<DependentVar> dependent_vars;
  /// Blockless top-level statements; in explicit-block mode only nested
  /// function definitions appear here.
  std::vector<SurfaceStmt> body;
  std::optional<std::vector<ExplicitBlock>> explicit_blocks;
};

}  // namespace yaps
