#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yaps/free_vars.hpp"

namespace yaps {
namespace {

using Names = std::set<std::string>;

TEST(FreeVars, ExpressionReadsEveryVariable) {
  Expr e = make_binary(BinaryOp::Add,
                       make_binary(BinaryOp::Mul, make_var("sigma"), make_var("eta")),
                       make_var("mu"));
  EXPECT_EQ(free_vars(e), (Names{"sigma", "eta", "mu"}));
}

TEST(FreeVars, CallTargetsAreNotVariables) {
  Expr e = make_call("exp", {make_index(make_var("x"), {make_var("i")})});
  EXPECT_EQ(free_vars(e), (Names{"x", "i"}));
}

TEST(FreeVars, LiteralsAreClosed) { EXPECT_TRUE(free_vars(make_real("2.5")).empty()); }

TEST(FreeVars, LoopVariableIsBound) {
  auto p = testing::stan_program(
      "model { for (i in 1:N) { y[i] ~ normal(mu[i], s); } }");
  EXPECT_EQ(free_vars(*p.block(BlockKind::Model)), (Names{"N", "y", "mu", "s"}));
}

TEST(FreeVars, AssignmentDoesNotReadPlainTarget) {
  auto p = testing::stan_program("model { x = a; z[k] = b; w += c; }");
  const auto& body = *p.block(BlockKind::Model);
  EXPECT_EQ(free_vars(body[0]), (Names{"a"}));
  EXPECT_EQ(free_vars(body[1]), (Names{"k", "b"}));
  EXPECT_EQ(free_vars(body[2]), (Names{"w", "c"}));
}

TEST(FreeVars, LocalDeclarationBindsFollowingStatements) {
  auto p = testing::stan_program("model { t = u; real u; u = 1; v ~ normal(u, 1); }");
  EXPECT_EQ(free_vars(*p.block(BlockKind::Model)), (Names{"u", "v"}));
  auto q = testing::stan_program("model { real u; u = 1; v ~ normal(u, 1); }");
  EXPECT_EQ(free_vars(*q.block(BlockKind::Model)), (Names{"v"}));
}

TEST(FreeVars, ControlFlowConditionsAreRead) {
  auto p = testing::stan_program("model { while (go) { if (c) break; } }");
  EXPECT_EQ(free_vars(*p.block(BlockKind::Model)), (Names{"go", "c"}));
}

TEST(FreeVars, DistributionArgumentsAndTruncation) {
  auto p = testing::stan_program("model { y ~ normal(m, s) T[lo, hi]; }");
  const auto& s = std::get<Sample>(p.block(BlockKind::Model)->front().node);
  EXPECT_EQ(free_vars(s.dist), (Names{"m", "s", "lo", "hi"}));
}

}  // namespace
}  // namespace yaps
