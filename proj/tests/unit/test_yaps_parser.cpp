#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yaps/normalize.hpp"
#include "yaps/yaps_parser.hpp"

namespace yaps {
namespace {

const char* kCoin = R"(import yaps


@yaps.model
def coin(x: int(lower=0, upper=1)[10]):
    theta: real(lower=0, upper=1) <~ uniform(0, 1)
    for i in range(1, 11):
        x[i] <~ bernoulli(theta)
)";

std::string wrap(const std::string& body) {
  return "@yaps.model\ndef m(y: real):\n" + body;
}

YapsParseResult parse(const std::string& source) { return parse_yaps_source(source, "m.py"); }

std::string first_code(const YapsParseResult& r) {
  return r.diagnostics.empty() ? "" : r.diagnostics.front().code;
}

int count_statements(const std::vector<Stmt>& body);

int count_statement(const Stmt& s) {
  return 1 + std::visit(Overloaded{
                            [](const For& f) { return count_statements(f.body); },
                            [](const While& w) { return count_statements(w.body); },
                            [](const If& i) {
                              return count_statements(i.then_body) +
                                     (i.else_body ? count_statements(*i.else_body) : 0);
                            },
                            [](const LocalBlock& b) { return count_statements(b.body); },
                            [](const auto&) { return 0; },
                        },
                        s.node);
}

int count_statements(const std::vector<Stmt>& body) {
  int n = 0;
  for (const auto& s : body) n += count_statement(s);
  return n;
}

TEST(YapsParser, CoinModel) {
  auto r = parse_yaps_source(kCoin, "coin.py");
  ASSERT_TRUE(r.diagnostics.empty()) << render(r.diagnostics, RenderFormat::Text);
  ASSERT_TRUE(r.model);
  const SurfaceModel& m = *r.model;
  EXPECT_EQ(m.name, "coin");
  EXPECT_FALSE(m.explicit_blocks);
  ASSERT_EQ(m.formal_args.size(), 1u);
  const Decl& x = m.formal_args[0].decl;
  EXPECT_EQ(x.name, "x");
  EXPECT_EQ(x.type.base, BaseType::Int);
  EXPECT_EQ(normalize(*x.type.lower), make_int(0));
  EXPECT_EQ(normalize(*x.type.upper), make_int(1));
  ASSERT_EQ(x.type.array_dims.size(), 1u);
  EXPECT_EQ(normalize(x.type.array_dims[0]), make_int(10));

  // Declare-and-sample, the loop, and the sampling statement inside it.
  ASSERT_EQ(m.body.size(), 2u);
  const auto& annotated = std::get<AnnotatedSample>(m.body[0].node);
  EXPECT_EQ(annotated.decl.name, "theta");
  EXPECT_EQ(annotated.dist.name, "uniform");
  const auto& loop = std::get<Stmt>(m.body[1].node);
  EXPECT_EQ(1 + count_statement(loop), 3);
  const auto& f = std::get<For>(loop.node);
  EXPECT_EQ(f.var, "i");
  EXPECT_EQ(normalize(f.lower), make_int(1));
  EXPECT_EQ(normalize(f.upper), make_int(10));
}

struct TruncationCase {
  const char* text;
  std::optional<Expr> lower;
  std::optional<Expr> upper;
};

TEST(YapsParser, TruncationForms) {
  const std::vector<TruncationCase> cases = {
      {".T[0, 10]", make_int(0), make_int(10)},
      {".T[0:]", make_int(0), std::nullopt},
      {".T[:10]", std::nullopt, make_int(10)},
      {".T[lo, hi]", make_var("lo"), make_var("hi")},
      {".T[-1.5:]", make_real("-1.5"), std::nullopt},
      {".T[:a + 1]", std::nullopt, make_binary(BinaryOp::Add, make_var("a"), make_int(1))},
  };
  for (const auto& c : cases) {
    auto r = parse(wrap(std::string("    y <~ normal(mu, sigma)") + c.text + "\n"));
    ASSERT_TRUE(r.model) << c.text << render(r.diagnostics, RenderFormat::Text);
    const auto& s = std::get<Sample>(std::get<Stmt>(r.model->body.at(0).node).node);
    Sample expected{make_var("y"),
                    DistCall{"normal", {make_var("mu"), make_var("sigma")},
                             DistCall::Truncation{c.lower, c.upper}}};
    EXPECT_EQ(normalize(make_stmt(s)), normalize(make_stmt(expected))) << c.text;
  }
}

TEST(YapsParser, ExplicitBlocks) {
  auto r = parse(wrap("    with parameters:\n        mu: real\n    with model:\n        y <~ normal(mu, 1)\n"));
  ASSERT_TRUE(r.model) << render(r.diagnostics, RenderFormat::Text);
  ASSERT_TRUE(r.model->explicit_blocks);
  ASSERT_EQ(r.model->explicit_blocks->size(), 2u);
  EXPECT_EQ((*r.model->explicit_blocks)[0].kind, BlockKind::Parameters);
  EXPECT_EQ((*r.model->explicit_blocks)[1].kind, BlockKind::Model);
}

TEST(YapsParser, MixingBlocksAndPlainStatementsIsAnError) {
  auto r = parse(wrap("    mu: real\n    with model:\n        y <~ normal(mu, 1)\n"));
  EXPECT_EQ(first_code(r), "E_MIXED_BLOCKS");
}

TEST(YapsParser, ModelSelection) {
  std::string src =
      "import yaps\n\ndef helper():\n    return 1\n\n@yaps.model\ndef first(a: real):\n    pass\n\n"
      "@yaps.model\ndef second(b: real):\n    pass\n";
  auto r = parse_yaps_source(src, "m.py");
  ASSERT_TRUE(r.model);
  EXPECT_EQ(r.model->name, "first");
  auto s = parse_yaps_source(src, "m.py", std::string("second"));
  ASSERT_TRUE(s.model);
  EXPECT_EQ(s.model->name, "second");
  auto missing = parse_yaps_source(src, "m.py", std::string("third"));
  EXPECT_FALSE(missing.model);
  EXPECT_EQ(first_code(missing), "E_NO_MODEL");
}

TEST(YapsParser, NoModelInFile) {
  auto r = parse("x = 1\n");
  EXPECT_EQ(first_code(r), "E_NO_MODEL");
}

TEST(YapsParser, DependentTypeVariables) {
  auto r = parse("import yaps\nN = yaps.dependent_type_var()\n@yaps.model\ndef m(y: vector(N)):\n    pass\n");
  ASSERT_TRUE(r.model);
  ASSERT_EQ(r.model->dependent_vars.size(), 1u);
  EXPECT_EQ(r.model->dependent_vars[0].name, "N");
}

TEST(YapsParser, ReservedAndKeywordIdentifiers) {
  EXPECT_EQ(first_code(parse(wrap("    target: real\n"))), "E_RESERVED");
  EXPECT_EQ(first_code(parse(wrap("    lambda: real\n"))), "E_KEYWORD");
}

TEST(YapsParser, ModelFunctionMayUseStanReservedName) {
  auto r = parse("@yaps.model\ndef model(y: real):\n    pass\n");
  ASSERT_TRUE(r.model) << render(r.diagnostics, RenderFormat::Text);
  EXPECT_EQ(r.model->name, "model");
}

TEST(YapsParser, RangeForms) {
  auto one = parse(wrap("    for i in range(n):\n        pass\n"));
  ASSERT_TRUE(one.model);
  const auto& f = std::get<For>(std::get<Stmt>(one.model->body[0].node).node);
  EXPECT_EQ(normalize(f.lower), make_int(1));
  EXPECT_EQ(normalize(f.upper), make_var("n"));
  EXPECT_EQ(first_code(parse(wrap("    for i in range(1, 10, 2):\n        pass\n"))), "E_UNSUPPORTED");
}

TEST(YapsParser, StringsOnlyInPrint) {
  EXPECT_TRUE(parse(wrap("    print(\"y = \", y)\n")).model);
  EXPECT_EQ(first_code(parse(wrap("    z = \"text\"\n"))), "E_SYNTAX");
}

TEST(YapsParser, SyntaxErrorHasPosition) {
  auto r = parse(wrap("    y <~ normal(0, \n"));
  ASSERT_FALSE(r.model);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "E_SYNTAX");
  EXPECT_TRUE(r.diagnostics[0].span);
}

TEST(YapsParser, TypeArityIsChecked) {
  EXPECT_FALSE(parse(wrap("    m: matrix(3)\n")).model);
  EXPECT_FALSE(parse(wrap("    s: simplex(3, lower=0)\n")).model);
}

TEST(YapsParser, ElifChainsNest) {
  auto r = parse(wrap("    if a:\n        pass\n    elif b:\n        pass\n    else:\n        pass\n"));
  ASSERT_TRUE(r.model);
  const auto& outer = std::get<If>(std::get<Stmt>(r.model->body[0].node).node);
  ASSERT_TRUE(outer.else_body);
  ASSERT_EQ(outer.else_body->size(), 1u);
  const auto& inner = std::get<If>(outer.else_body->front().node);
  EXPECT_TRUE(inner.else_body);
}

TEST(YapsParser, NestedFunctionDefinition) {
  auto r = parse(wrap("    def twice(v: real) -> real:\n        return 2 * v\n    y <~ normal(twice(1), 1)\n"));
  ASSERT_TRUE(r.model) << render(r.diagnostics, RenderFormat::Text);
  const auto& fn = std::get<FunctionDef>(r.model->body[0].node);
  EXPECT_EQ(fn.name, "twice");
  ASSERT_TRUE(fn.return_type);
  EXPECT_EQ(fn.return_type->base, BaseType::Real);
}

}  // namespace
}  // namespace yaps
