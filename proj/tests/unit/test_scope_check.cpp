#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yaps/scope_check.hpp"
#include "yaps/yaps_parser.hpp"

namespace yaps {
namespace {

Diagnostics check(const std::string& source) {
  auto parsed = parse_yaps_source(source, "m.py");
  if (!parsed.model) {
    ADD_FAILURE() << render(parsed.diagnostics, RenderFormat::Text);
    return {};
  }
  return check_scopes(*parsed.model);
}

struct Expected {
  Severity severity;
  const char* code;
  const char* message;
  int line;
  int col;
};

void expect_table(const Diagnostics& got, const std::vector<Expected>& table) {
  ASSERT_EQ(got.size(), table.size()) << render(got, RenderFormat::Text);
  for (std::size_t k = 0; k < table.size(); ++k) {
    EXPECT_EQ(got[k].severity, table[k].severity) << k;
    EXPECT_EQ(got[k].code, table[k].code) << k;
    EXPECT_EQ(got[k].message, table[k].message) << k;
    ASSERT_TRUE(got[k].span) << k;
    EXPECT_EQ(got[k].span->start_line, table[k].line) << k;
    EXPECT_EQ(got[k].span->start_col, table[k].col) << k;
  }
}

TEST(ScopeCheck, MisspelledVariable) {
  auto source = testing::read_text(testing::corpus_dir() / "yaps" / "misspelled.py");
  auto diags = check(source);
  expect_table(diags, {
                          {Severity::Warning, "W_UNUSED", "unused variable theta", 6, 5},
                          {Severity::Error, "E_UNDEF", "undefined variable thetap", 8, 27},
                      });
  EXPECT_EQ(diags[1].span->end_col, 33);
  EXPECT_EQ(diags[0].span->end_col, 10);
}

TEST(ScopeCheck, CleanCoinModel) {
  auto source = testing::read_text(testing::corpus_dir() / "yaps" / "coin.py");
  EXPECT_TRUE(check(source).empty());
}

TEST(ScopeCheck, LoopVariableOutsideLoop) {
  const char* source =
      "@yaps.model\n"
      "def m(N: int, y: real[N]):\n"
      "    mu: real <~ normal(0, 1)\n"
      "    for i in range(1, N + 1):\n"
      "        y[i] <~ normal(mu, 1)\n"
      "    z: real\n"
      "    print(i, k)\n";
  expect_table(check(source), {
                                  {Severity::Warning, "W_UNUSED", "unused variable z", 6, 5},
                                  {Severity::Error, "E_UNDEF", "undefined variable i", 7, 11},
                                  {Severity::Error, "E_UNDEF", "undefined variable k", 7, 14},
                              });
}

TEST(ScopeCheck, ReadBeforeDeclaration) {
  const char* source =
      "@yaps.model\n"
      "def m(y: real):\n"
      "    y <~ normal(mu, 1)\n"
      "    mu: real\n";
  expect_table(check(source), {{Severity::Error, "E_UNDEF", "undefined variable mu", 3, 17},
                               {Severity::Warning, "W_UNUSED", "unused variable mu", 4, 5}});
}

TEST(ScopeCheck, FormalUsedOnlyInAnotherFormalType) {
  const char* source =
      "@yaps.model\n"
      "def m(N: int, y: vector(N)):\n"
      "    y <~ normal(0, 1)\n";
  EXPECT_TRUE(check(source).empty());
}

TEST(ScopeCheck, UnusedFormalIsReported) {
  const char* source =
      "@yaps.model\n"
      "def m(a: real, b: real):\n"
      "    a <~ normal(0, 1)\n";
  expect_table(check(source), {{Severity::Warning, "W_UNUSED", "unused variable b", 2, 16}});
}

TEST(ScopeCheck, DependentVariablesOnlyInTypes) {
  const char* source =
      "import yaps\n"
      "N = yaps.dependent_type_var()\n"
      "@yaps.model\n"
      "def m(y: vector(N)):\n"
      "    y <~ normal(0, N)\n";
  expect_table(check(source), {{Severity::Error, "E_UNDEF", "undefined variable N", 5, 20}});
}

TEST(ScopeCheck, UnknownFunctionsAndDistributions) {
  const char* source =
      "@yaps.model\n"
      "def m(y: real):\n"
      "    y <~ wibble(frob(1), 1)\n";
  expect_table(check(source),
               {{Severity::Warning, "W_UNKNOWN_FN", "unknown distribution wibble", 3, 5},
                {Severity::Warning, "W_UNKNOWN_FN", "unknown function frob", 3, 17}});
}

TEST(ScopeCheck, UserDensityDefinesDistribution) {
  const char* source =
      "@yaps.model\n"
      "def m(y: real):\n"
      "    def mine_lpdf(v: real, s: real) -> real:\n"
      "        return -v * v / s\n"
      "    y <~ mine(2)\n";
  EXPECT_TRUE(check(source).empty()) << render(check(source), RenderFormat::Text);
}

TEST(ScopeCheck, FunctionBodiesSeeOnlyTheirParameters) {
  const char* source =
      "@yaps.model\n"
      "def m(y: real):\n"
      "    def f(v: real) -> real:\n"
      "        return v + y\n"
      "    y <~ normal(f(1), 1)\n";
  expect_table(check(source), {{Severity::Error, "E_UNDEF", "undefined variable y", 4, 20}});
}

TEST(ScopeCheck, ModelBlockDeclarationsAreLocal) {
  const char* source =
      "@yaps.model\n"
      "def m(y: real):\n"
      "    with parameters:\n"
      "        mu: real\n"
      "    with model:\n"
      "        t: real = mu * 2\n"
      "        y <~ normal(t, 1)\n"
      "    with generated_quantities:\n"
      "        u: real = t\n";
  expect_table(check(source), {{Severity::Error, "E_UNDEF", "undefined variable t", 9, 19}});
}

TEST(ScopeCheck, AssignedOutputsAreNotUnused) {
  const char* source =
      "@yaps.model\n"
      "def m(y: real):\n"
      "    mu: real <~ normal(0, 1)\n"
      "    y <~ normal(mu, 1)\n"
      "    y_rep: real\n"
      "    y_rep = normal_rng(mu, 1)\n";
  EXPECT_TRUE(check(source).empty());
}

}  // namespace
}  // namespace yaps
