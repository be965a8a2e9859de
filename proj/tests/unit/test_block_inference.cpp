#include <gtest/gtest.h>

#include "yaps/block_inference.hpp"
#include "yaps/lower.hpp"
#include "yaps/stan_emitter.hpp"
#include "yaps/yaps_parser.hpp"

namespace yaps {
namespace {

BlockInferenceResult infer(const std::string& body, const std::string& formals = "y: real") {
  std::string source = "@yaps.model\ndef m(" + formals + "):\n" + body;
  auto parsed = parse_yaps_source(source, "m.py");
  if (!parsed.model) {
    ADD_FAILURE() << render(parsed.diagnostics, RenderFormat::Text);
    return {};
  }
  auto lowered = lower(*parsed.model);
  return infer_blocks(std::get<UnplacedModel>(lowered.output));
}

struct RuleCase {
  const char* label;
  const char* formals;
  const char* body;
  std::map<std::string, VarClass> classes;
  std::vector<std::string> codes;
  const char* stan;  // expected placement; empty when errors are expected
};

const std::vector<RuleCase>& rule_cases() {
  static const std::vector<RuleCase> cases = {
      {"observed and latent", "x: int(lower=0, upper=1)[10]",
       "    theta: real(lower=0, upper=1) <~ uniform(0, 1)\n"
       "    for i in range(1, 11):\n"
       "        x[i] <~ bernoulli(theta)\n",
       {{"x", VarClass::DataVar}, {"theta", VarClass::ParamVar}},
       {},
       "data {\n  int<lower=0,upper=1> x[10];\n}\n"
       "parameters {\n  real<lower=0,upper=1> theta;\n}\n"
       "model {\n  theta ~ uniform(0, 1);\n  for (i in 1 : 10) {\n    x[i] ~ bernoulli(theta);\n  }\n}\n"},
      {"assigned from data", "y: vector(5)",
       "    m: real\n"
       "    m = mean(y)\n"
       "    mu: real <~ normal(m, 1)\n"
       "    y <~ normal(mu, 1)\n",
       {{"y", VarClass::DataVar}, {"m", VarClass::TransformedDataVar}, {"mu", VarClass::ParamVar}},
       {},
       "data {\n  vector[5] y;\n}\n"
       "transformed data {\n  real m;\n  m = mean(y);\n}\n"
       "parameters {\n  real mu;\n}\n"
       "model {\n  mu ~ normal(m, 1);\n  y ~ normal(mu, 1);\n}\n"},
      {"parameter dependent and read by the model", "y: real",
       "    mu: real <~ normal(0, 1)\n"
       "    s: real\n"
       "    s = exp(mu)\n"
       "    y <~ normal(s, 1)\n",
       {{"mu", VarClass::ParamVar}, {"s", VarClass::TransformedParamVar}},
       {},
       "data {\n  real y;\n}\n"
       "parameters {\n  real mu;\n}\n"
       "transformed parameters {\n  real s;\n  s = exp(mu);\n}\n"
       "model {\n  mu ~ normal(0, 1);\n  y ~ normal(s, 1);\n}\n"},
      {"parameter dependent and never read by the model", "y: real",
       "    mu: real <~ normal(0, 1)\n"
       "    y <~ normal(mu, 1)\n"
       "    y_rep: real\n"
       "    y_rep = normal_rng(mu, 1)\n",
       {{"mu", VarClass::ParamVar}, {"y_rep", VarClass::GenQuantVar}},
       {},
       "data {\n  real y;\n}\n"
       "parameters {\n  real mu;\n}\n"
       "model {\n  mu ~ normal(0, 1);\n  y ~ normal(mu, 1);\n}\n"
       "generated quantities {\n  real y_rep;\n  y_rep = normal_rng(mu, 1);\n}\n"},
      {"sampled and assigned", "y: real",
       "    mu: real <~ normal(0, 1)\n"
       "    mu = 3\n"
       "    y <~ normal(mu, 1)\n",
       {},
       {"E_CONFLICT"},
       ""},
      {"one statement feeding two blocks", "y: real",
       "    m: real\n"
       "    mu: real <~ normal(0, 1)\n"
       "    for i in range(1, 3):\n"
       "        m = 1\n"
       "        y <~ normal(mu, 1)\n",
       {{"m", VarClass::TransformedDataVar}},
       {"E_AMBIGUOUS_BLOCK"},
       ""},
  };
  return cases;
}

TEST(BlockInference, RuleTable) {
  for (const auto& c : rule_cases()) {
    auto r = infer(c.body, c.formals);
    std::vector<std::string> codes;
    for (const auto& d : r.diagnostics) codes.push_back(d.code);
    EXPECT_EQ(codes, c.codes) << c.label << "\n" << render(r.diagnostics, RenderFormat::Text);
    for (const auto& [name, cls] : c.classes) {
      ASSERT_TRUE(r.classes.contains(name)) << c.label << ": " << name;
      EXPECT_EQ(var_class_name(r.classes.at(name)), var_class_name(cls)) << c.label << ": " << name;
    }
    if (*c.stan) EXPECT_EQ(emit_stan(r.program).text, c.stan) << c.label;
  }
}

TEST(BlockInference, ConflictPointsAtBothStatements) {
  auto r = infer("    mu: real <~ normal(0, 1)\n    mu = 3\n    y <~ normal(mu, 1)\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  const auto& d = r.diagnostics[0];
  EXPECT_EQ(d.span->start_line, 3);
  ASSERT_EQ(d.notes.size(), 1u);
  EXPECT_EQ(d.notes[0].text, "assigned here");
  EXPECT_EQ(d.notes[0].span->start_line, 4);
}

TEST(BlockInference, AssignedDataIsAConflict) {
  auto r = infer("    y = 2\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "E_CONFLICT");
}

TEST(BlockInference, UnsampledUnassignedIsParameter) {
  auto r = infer("    mu: real\n    y <~ normal(mu, 1)\n");
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.classes.at("mu"), VarClass::ParamVar);
}

TEST(BlockInference, ModelReadsThroughChainOfTransforms) {
  auto r = infer(
      "    mu: real <~ normal(0, 1)\n"
      "    a: real\n"
      "    a = mu * 2\n"
      "    b: real\n"
      "    b = a + 1\n"
      "    y <~ normal(b, 1)\n");
  EXPECT_EQ(r.classes.at("a"), VarClass::TransformedParamVar);
  EXPECT_EQ(r.classes.at("b"), VarClass::TransformedParamVar);
}

TEST(BlockInference, ControlFlowConditionCarriesDependency) {
  auto r = infer(
      "    mu: real <~ normal(0, 1)\n"
      "    flag: real\n"
      "    if mu > 0:\n"
      "        flag = 1\n"
      "    else:\n"
      "        flag = 0\n"
      "    y <~ normal(mu, 1)\n");
  EXPECT_EQ(r.classes.at("flag"), VarClass::GenQuantVar);
  ASSERT_TRUE(r.program.has_block(BlockKind::GeneratedQuantities));
  EXPECT_EQ(r.program.block(BlockKind::GeneratedQuantities)->size(), 2u);
}

TEST(BlockInference, DataBlockAlwaysPresent) {
  auto r = infer("    pass\n", "");
  EXPECT_TRUE(r.program.has_block(BlockKind::Data));
}

TEST(BlockInference, FunctionsMoveToFunctionsBlock) {
  auto r = infer(
      "    def twice(v: real) -> real:\n"
      "        return 2 * v\n"
      "    y <~ normal(twice(1), 1)\n");
  ASSERT_TRUE(r.program.functions);
  EXPECT_EQ(r.program.functions->size(), 1u);
}

}  // namespace
}  // namespace yaps
