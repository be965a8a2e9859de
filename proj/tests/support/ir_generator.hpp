#pragma once

#include <cstdint>
#include <random>

#include "yaps/ir.hpp"

namespace yaps::testing {

/// Random well-formed Programs for printer/parser fixpoint tests.
///
/// Output respects the constraints both surface syntaxes impose: data and
/// parameters blocks hold only declarations without initializers, string
/// literals appear only in print/reject, slices only as indices, constraints
/// only on top-level declarations outside the model block, and no
/// identifier is a keyword of either language. Expression and statement
/// nesting never exceed `max_depth`.
class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint32_t seed, int max_depth = 5)
      : rng_(seed), max_depth_(max_depth) {}

  Program program();
  Expr expr(int depth);

 private:
  std::mt19937 rng_;
  int max_depth_;

  int pick(int lo, int hi);  // inclusive
  bool chance(double p);
  template <typename T, std::size_t N>
  const T& one_of(const T (&items)[N]) {
    return items[pick(0, static_cast<int>(N) - 1)];
  }

  std::string name();
  Expr leaf();
  Expr int_leaf();
  Expr lvalue(int depth);
  Expr index_arg(int depth);
  StanType type(bool constrained);
  DistCall dist(int depth);
  ArgType arg_type();

  Stmt declare(bool constrained, bool with_init, int depth);
  Stmt statement(BlockKind block, int depth, bool in_loop, bool in_function);
  std::vector<Stmt> body(BlockKind block, int depth, bool in_loop, bool in_function, int max_len);
  FunctionDef function();
};

}  // namespace yaps::testing
