#include "yaps/yaps_parser.hpp"

#include <algorithm>

#include "yaps/builtins.hpp"
#include "yaps/lower.hpp"

namespace yaps {

namespace {

struct ParseError {
  Diagnostic diagnostic;
};

enum class Ctx { ModelTop, Block, Nested, Function };

// Statements collected while parsing one suite.
struct Sink {
  std::vector<SurfaceStmt> stmts;
  std::vector<ExplicitBlock> blocks;
  std::optional<SourceSpan> first_plain;  // first statement that is not a `def`
};

std::string describe(const YToken& tok) {
  switch (tok.kind) {
    case YTok::Name: return "'" + tok.text + "'";
    case YTok::Int:
    case YTok::Real: return "number " + tok.text;
    case YTok::String: return "string literal";
    case YTok::Other: return "'" + tok.text + "'";
    case YTok::Newline: return "end of line";
    case YTok::Indent: return "unexpected indentation";
    case YTok::Dedent: return "end of block";
    case YTok::End: return "end of input";
    default: return "'" + std::string(ytok_spelling(tok.kind)) + "'";
  }
}

std::string join_expected(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

class Parser {
 public:
  Parser(std::span<const YToken> tokens, const std::optional<std::string>& model_name)
      : toks_(tokens), wanted_(model_name) {}

  YapsParseResult run() {
    YapsParseResult result;
    try {
      while (!at(YTok::End)) {
        if (at(YTok::Newline) || at(YTok::Dedent)) {
          advance();
        } else if (at(YTok::At)) {
          decorated(result);
        } else if (!try_dependent_var()) {
          skip_statement();
        }
      }
    } catch (ParseError& e) {
      result.model.reset();
      result.diagnostics.push_back(std::move(e.diagnostic));
      return result;
    }
    if (!result.model) {
      std::string message = wanted_ ? "no model named '" + *wanted_ + "'"
                                    : std::string("no function decorated with @yaps.model");
      if (wanted_ && !seen_models_.empty()) {
        message += " (available: " + join_expected(seen_models_) + ")";
      }
      result.diagnostics.push_back(Diagnostic::error(codes::kNoModel, message, cur().span));
    } else {
      result.model->dependent_vars = dependent_vars_;
    }
    return result;
  }

 private:
  std::span<const YToken> toks_;
  std::optional<std::string> wanted_;
  std::size_t pos_ = 0;
  SourceSpan last_;
  bool allow_strings_ = false;
  std::vector<DependentVar> dependent_vars_;
  std::vector<std::string> seen_models_;

  // ---- token access

  const YToken& cur() const { return toks_[pos_]; }
  const YToken& peek(std::size_t ahead = 1) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(YTok kind) const { return cur().kind == kind; }
  bool at_name(std::string_view text) const { return at(YTok::Name) && cur().text == text; }

  const YToken& advance() {
    const YToken& tok = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    if (tok.kind != YTok::Dedent && tok.kind != YTok::Indent) last_ = tok.span;
    return tok;
  }

  SourceSpan from(const SourceSpan& start) const { return SourceSpan::cover(start, last_); }

  [[noreturn]] void fail(std::string message, const SourceSpan& span,
                         std::string_view code = codes::kSyntax) {
    throw ParseError{Diagnostic::error(code, std::move(message), span)};
  }

  [[noreturn]] void fail_expected(const std::vector<std::string>& expected) {
    Diagnostic d = Diagnostic::error(
        codes::kSyntax, "expected " + join_expected(expected) + ", found " + describe(cur()),
        cur().span);
    d.note("expected one of: " + join_expected(expected));
    throw ParseError{std::move(d)};
  }

  const YToken& expect(YTok kind) {
    if (!at(kind)) fail_expected({"'" + std::string(ytok_spelling(kind)) + "'"});
    return advance();
  }

  void expect_name(std::string_view text) {
    if (!at_name(text)) fail_expected({"'" + std::string(text) + "'"});
    advance();
  }

  void check_identifier(const YToken& tok) {
    if (is_surface_keyword(tok.text)) {
      fail("'" + tok.text + "' is a keyword of the surface language and cannot be used as an "
               "identifier; rename it (for example '" + tok.text + "_')",
           tok.span, codes::kKeyword);
    }
    if (is_stan_reserved(tok.text)) {
      fail("'" + tok.text + "' is a reserved word in Stan and cannot be used as an identifier",
           tok.span, codes::kReserved);
    }
  }

  const YToken& identifier(std::string_view what) {
    if (!at(YTok::Name)) fail_expected({std::string(what)});
    check_identifier(cur());
    return advance();
  }

  // ---- module level

  void skip_statement() {
    while (!at(YTok::Newline) && !at(YTok::End)) advance();
    if (at(YTok::Newline)) advance();
    if (at(YTok::Indent)) {
      int depth = 0;
      do {
        if (at(YTok::Indent)) ++depth;
        if (at(YTok::Dedent)) --depth;
        advance();
      } while (depth > 0 && !at(YTok::End));
    }
  }

  bool try_dependent_var() {
    if (!at(YTok::Name) || peek().kind != YTok::Assign) return false;
    std::size_t k = 2;
    if (peek(k).kind == YTok::Name && peek(k).text == "yaps" && peek(k + 1).kind == YTok::Dot) {
      k += 2;
    }
    if (peek(k).kind != YTok::Name || peek(k).text != "dependent_type_var" ||
        peek(k + 1).kind != YTok::LParen || peek(k + 2).kind != YTok::RParen) {
      return false;
    }
    const YToken& name = advance();
    dependent_vars_.push_back({name.text, name.span});
    skip_statement();
    return true;
  }

  void decorated(YapsParseResult& result) {
    bool is_model = false;
    while (at(YTok::At)) {
      advance();
      std::string dotted;
      while (at(YTok::Name) || at(YTok::Dot)) dotted += advance().text;
      is_model = is_model || dotted == "yaps.model" || dotted == "model";
      while (!at(YTok::Newline) && !at(YTok::End)) advance();
      if (at(YTok::Newline)) advance();
    }
    if (!at_name("def") || !is_model) {
      skip_statement();
      return;
    }
    const std::string name = peek().text;
    seen_models_.push_back(name);
    const bool selected = !result.model && (!wanted_ || *wanted_ == name);
    if (!selected) {
      skip_statement();
      return;
    }
    result.model = model_def();
  }

  SurfaceModel model_def() {
    SurfaceModel model;
    const SourceSpan start = advance().span;  // def
    // The model name never reaches Stan, so only surface keywords are refused.
    if (!at(YTok::Name)) fail_expected({"model name"});
    if (is_surface_keyword(cur().text)) check_identifier(cur());
    model.name = advance().text;
    expect(YTok::LParen);
    while (!at(YTok::RParen)) {
      const YToken& name = identifier("argument name");
      if (!at(YTok::Colon)) {
        fail("formal argument '" + name.text + "' needs a type annotation such as ': real'",
             name.span);
      }
      advance();
      StanType type = stan_type();
      model.formal_args.push_back(
          FormalArg{Decl{name.text, std::move(type), name.span}, from(name.span)});
      if (!at(YTok::Comma)) break;
      advance();
    }
    expect(YTok::RParen);
    if (at(YTok::Arrow)) fail("a model cannot declare a return type", cur().span);
    expect(YTok::Colon);
    model.span = from(start);

    Sink sink;
    suite(Ctx::ModelTop, sink);
    if (!sink.blocks.empty() && sink.first_plain) {
      fail("explicit 'with' blocks cannot be mixed with blockless top-level statements",
           *sink.first_plain, codes::kMixedBlocks);
    }
    model.body = std::move(sink.stmts);
    if (!sink.blocks.empty()) model.explicit_blocks = std::move(sink.blocks);
    return model;
  }

  // ---- statements

  static Ctx inner(Ctx ctx) { return ctx == Ctx::Function ? Ctx::Function : Ctx::Nested; }

  void suite(Ctx ctx, Sink& sink) {
    if (at(YTok::Newline)) {
      advance();
      if (!at(YTok::Indent)) fail("expected an indented block", cur().span, codes::kIndent);
      advance();
      while (!at(YTok::Dedent) && !at(YTok::End)) statement(ctx, sink);
      if (at(YTok::Dedent)) advance();
    } else {
      simple_line(ctx, sink);
    }
  }

  std::vector<Stmt> body(Ctx ctx) {
    Sink sink;
    suite(ctx, sink);
    std::vector<Stmt> out;
    for (auto& s : sink.stmts) out.push_back(std::move(std::get<Stmt>(s.node)));
    return out;
  }

  void push_plain(Sink& sink, SurfaceStmt stmt, const SourceSpan& span) {
    if (!sink.first_plain) sink.first_plain = span;
    sink.stmts.push_back(std::move(stmt));
  }

  void statement(Ctx ctx, Sink& sink) {
    if (at(YTok::Indent)) fail("unexpected indentation", cur().span, codes::kIndent);
    if (at_name("if")) return push_if(ctx, sink);
    if (at_name("for")) return for_stmt(ctx, sink);
    if (at_name("while")) return while_stmt(ctx, sink);
    if (at_name("with")) return with_stmt(ctx, sink);
    if (at_name("def")) return function_def(ctx, sink);
    simple_line(ctx, sink);
  }

  void simple_line(Ctx ctx, Sink& sink) {
    simple_statement(ctx, sink);
    while (at(YTok::Semicolon)) {
      advance();
      if (at(YTok::Newline) || at(YTok::End)) break;
      simple_statement(ctx, sink);
    }
    if (at(YTok::End)) return;
    if (!at(YTok::Newline)) fail_expected({"end of line", "';'"});
    advance();
  }

  void push_if(Ctx ctx, Sink& sink) {
    Stmt stmt = if_stmt(ctx);
    const SourceSpan span = *stmt.span;
    push_plain(sink, SurfaceStmt{std::move(stmt)}, span);
  }

  // `if`/`elif` chains become nested If statements in the else branch.
  Stmt if_stmt(Ctx ctx) {
    const SourceSpan start = advance().span;
    Expr cond = expr();
    expect(YTok::Colon);
    const SourceSpan header = from(start);
    If node{std::move(cond), body(inner(ctx)), std::nullopt};
    if (at_name("elif")) {
      std::vector<Stmt> chain;
      chain.push_back(if_stmt(ctx));
      node.else_body = std::move(chain);
    } else if (at_name("else")) {
      advance();
      expect(YTok::Colon);
      node.else_body = body(inner(ctx));
    }
    return make_stmt(std::move(node), header);
  }

  void for_stmt(Ctx ctx, Sink& sink) {
    const SourceSpan start = advance().span;
    const YToken& var = identifier("loop variable");
    expect_name("in");
    if (!at_name("range")) {
      fail("only 'for ... in range(...)' loops are supported", cur().span,
           codes::kUnsupported);
    }
    const SourceSpan range_start = advance().span;
    std::vector<Expr> args = call_args();
    expect(YTok::Colon);
    const SourceSpan header = from(start);
    Expr lower_bound;
    Expr upper_bound;
    if (args.size() == 1) {
      lower_bound = make_int(1);
      upper_bound = std::move(args[0]);
    } else if (args.size() == 2) {
      lower_bound = std::move(args[0]);
      upper_bound = inclusive_upper(std::move(args[1]));
    } else {
      fail("range() takes one or two arguments; a step is not supported", from(range_start),
           codes::kUnsupported);
    }
    For loop{var.text, std::move(lower_bound), std::move(upper_bound), body(inner(ctx))};
    push_plain(sink, SurfaceStmt{make_stmt(std::move(loop), header)}, header);
  }

  void while_stmt(Ctx ctx, Sink& sink) {
    const SourceSpan start = advance().span;
    Expr cond = expr();
    expect(YTok::Colon);
    const SourceSpan header = from(start);
    While loop{std::move(cond), body(inner(ctx))};
    push_plain(sink, SurfaceStmt{make_stmt(std::move(loop), header)}, header);
  }

  void with_stmt(Ctx ctx, Sink& sink) {
    const SourceSpan start = advance().span;
    if (!at(YTok::Name)) fail_expected({"block name"});
    const YToken& name = advance();
    expect(YTok::Colon);
    const SourceSpan header = from(start);
    if (name.text == "block") {
      LocalBlock block{body(inner(ctx))};
      push_plain(sink, SurfaceStmt{make_stmt(std::move(block), header)}, header);
      return;
    }
    auto kind = block_from_surface_name(name.text);
    if (!kind) {
      fail("unknown block '" + name.text +
               "'; expected functions, data, transformed_data, parameters, "
               "transformed_parameters, model, generated_quantities or block",
           name.span);
    }
    if (ctx != Ctx::ModelTop) {
      fail("explicit blocks are only allowed at the top level of a model", header);
    }
    for (const auto& b : sink.blocks) {
      if (b.kind == *kind) fail("duplicate block '" + name.text + "'", header);
    }
    Sink inner_sink;
    suite(Ctx::Block, inner_sink);
    if (*kind == BlockKind::Functions && inner_sink.first_plain) {
      fail("a functions block may only contain function definitions", *inner_sink.first_plain);
    }
    sink.blocks.push_back(ExplicitBlock{*kind, std::move(inner_sink.stmts), header});
  }

  ArgType arg_type() {
    if (!at(YTok::Name)) fail_expected({"type"});
    const YToken& tok = advance();
    auto base = base_type_from_name(tok.text);
    if (!base || (*base != BaseType::Int && *base != BaseType::Real &&
                  *base != BaseType::Vector && *base != BaseType::RowVector &&
                  *base != BaseType::Matrix)) {
      fail("'" + tok.text + "' is not a function argument type", tok.span);
    }
    ArgType type{*base, 0};
    if (at(YTok::LBracket)) {
      advance();
      type.array_rank = 1;
      while (at(YTok::Comma)) {
        advance();
        ++type.array_rank;
      }
      expect(YTok::RBracket);
    }
    return type;
  }

  void function_def(Ctx ctx, Sink& sink) {
    if (ctx != Ctx::ModelTop && ctx != Ctx::Block) {
      fail("functions must be defined at the top level of a model", cur().span);
    }
    const SourceSpan start = advance().span;
    FunctionDef fn;
    fn.name = identifier("function name").text;
    expect(YTok::LParen);
    while (!at(YTok::RParen)) {
      const YToken& name = identifier("parameter name");
      expect(YTok::Colon);
      fn.params.push_back(FunctionParam{name.text, arg_type()});
      if (!at(YTok::Comma)) break;
      advance();
    }
    expect(YTok::RParen);
    if (at(YTok::Arrow)) {
      advance();
      if (at_name("None")) {
        advance();
      } else {
        fn.return_type = arg_type();
      }
    }
    expect(YTok::Colon);
    fn.span = from(start);
    fn.body = body(Ctx::Function);
    sink.stmts.push_back(SurfaceStmt{std::move(fn)});
  }

  void simple_statement(Ctx ctx, Sink& sink) {
    const SourceSpan start = cur().span;
    auto push = [&](Stmt::Node node) {
      const SourceSpan span = from(start);
      push_plain(sink, SurfaceStmt{Stmt{std::move(node), span}}, span);
    };

    if (at_name("pass")) {
      advance();
      return;
    }
    if (at_name("break")) {
      advance();
      return push(Break{});
    }
    if (at_name("continue")) {
      advance();
      return push(Continue{});
    }
    if (at_name("return")) {
      advance();
      Return ret;
      if (!at(YTok::Newline) && !at(YTok::Semicolon) && !at(YTok::End)) ret.value = expr();
      return push(std::move(ret));
    }
    if ((at_name("print") || at_name("reject")) && peek().kind == YTok::LParen) {
      const bool is_print = advance().text == "print";
      allow_strings_ = true;
      std::vector<Expr> args = call_args();
      allow_strings_ = false;
      if (is_print) return push(Print{std::move(args)});
      return push(Reject{std::move(args)});
    }
    if (at_name("target") && peek().kind == YTok::PlusAssign) {
      advance();
      advance();
      return push(TargetIncrement{expr()});
    }
    if (at(YTok::String) && (peek().kind == YTok::Newline || peek().kind == YTok::End)) {
      advance();  // docstring
      return;
    }
    if (at(YTok::Name) && peek().kind == YTok::Colon) return declaration(ctx, sink, start);

    Expr lhs = expr();
    if (at(YTok::Sample)) {
      advance();
      return push(Sample{std::move(lhs), dist_call()});
    }
    std::optional<AssignOp> op;
    switch (cur().kind) {
      case YTok::Assign: op = AssignOp::Set; break;
      case YTok::PlusAssign: op = AssignOp::Add; break;
      case YTok::MinusAssign: op = AssignOp::Sub; break;
      case YTok::StarAssign: op = AssignOp::Mul; break;
      case YTok::SlashAssign: op = AssignOp::Div; break;
      default: break;
    }
    if (op) {
      require_lvalue(lhs, "assignment");
      advance();
      Expr rhs = expr();
      return push(Assign{std::move(lhs), *op, std::move(rhs)});
    }
    if (auto* call = std::get_if<Call>(&lhs.node)) return push(CallStmt{std::move(*call)});
    fail_expected({"'<~'", "'='", "an augmented assignment"});
  }

  void require_lvalue(const Expr& lhs, std::string_view what) {
    if (!is_lvalue(lhs)) {
      fail(std::string("the left-hand side of a ") + std::string(what) +
               " must be a variable or an indexed variable",
           lhs.span.value_or(cur().span), codes::kUnsupported);
    }
  }

  void declaration(Ctx ctx, Sink& sink, const SourceSpan& start) {
    const YToken& name = advance();
    check_identifier(name);
    advance();  // ':'
    StanType type = stan_type();
    Decl decl{name.text, std::move(type), name.span};
    if (at(YTok::Sample)) {
      if (ctx != Ctx::ModelTop && ctx != Ctx::Block) {
        fail("declare-and-sample is only allowed at the top level of a model", from(start));
      }
      advance();
      DistCall dist = dist_call();
      const SourceSpan span = from(start);
      push_plain(sink, SurfaceStmt{AnnotatedSample{std::move(decl), std::move(dist), span}},
                 span);
      return;
    }
    std::optional<Expr> init;
    if (at(YTok::Assign)) {
      advance();
      init = expr();
    }
    const SourceSpan span = from(start);
    push_plain(sink, SurfaceStmt{make_stmt(Declare{std::move(decl), std::move(init)}, span)},
               span);
  }

  // ---- types

  StanType stan_type() {
    if (!at(YTok::Name)) fail_expected({"type"});
    const YToken& tok = advance();
    auto base = base_type_from_name(tok.text);
    if (!base) fail("unknown type '" + tok.text + "'", tok.span);
    StanType type;
    type.base = *base;
    if (at(YTok::LParen)) {
      advance();
      bool keywords = false;
      while (!at(YTok::RParen)) {
        if (at(YTok::Name) && peek().kind == YTok::Assign) {
          keywords = true;
          const YToken& key = advance();
          advance();
          if (key.text == "lower" && !type.lower) {
            type.lower = expr();
          } else if (key.text == "upper" && !type.upper) {
            type.upper = expr();
          } else {
            fail("unexpected type argument '" + key.text + "'; expected lower= or upper=",
                 key.span);
          }
        } else {
          if (keywords) fail("size arguments must come before lower=/upper=", cur().span);
          type.type_dims.push_back(expr());
        }
        if (!at(YTok::Comma)) break;
        advance();
      }
      expect(YTok::RParen);
    }
    const auto [min_dims, max_dims] = type_dim_arity(type.base);
    const int dims = static_cast<int>(type.type_dims.size());
    if (dims < min_dims || dims > max_dims) {
      const std::string count = min_dims == max_dims
                                    ? std::to_string(min_dims)
                                    : std::to_string(min_dims) + " or " + std::to_string(max_dims);
      fail("type '" + tok.text + "' takes " + count + " size argument" +
               (max_dims == 1 ? "" : "s"),
           from(tok.span));
    }
    if ((type.lower || type.upper) && !admits_bounds(type.base)) {
      fail("type '" + tok.text + "' does not take lower/upper bounds", from(tok.span));
    }
    if (at(YTok::LBracket)) {
      advance();
      while (true) {
        type.array_dims.push_back(expr());
        if (!at(YTok::Comma)) break;
        advance();
      }
      expect(YTok::RBracket);
    }
    return type;
  }

  // ---- distributions

  DistCall dist_call() {
    if (!at(YTok::Name)) fail_expected({"distribution"});
    const YToken& name = advance();
    if (is_surface_keyword(name.text)) check_identifier(name);
    DistCall dist{name.text, call_args(), std::nullopt};
    if (at(YTok::Dot) && peek().kind == YTok::Name && peek().text == "T" &&
        peek(2).kind == YTok::LBracket) {
      const SourceSpan start = advance().span;
      advance();
      advance();
      DistCall::Truncation trunc;
      if (at(YTok::Colon)) {
        advance();
        if (at(YTok::RBracket)) fail("a truncation needs at least one bound", from(start));
        trunc.upper = expr();
      } else {
        trunc.lower = expr();
        if (at(YTok::Comma)) {
          advance();
          trunc.upper = expr();
        } else if (at(YTok::Colon)) {
          advance();
          if (!at(YTok::RBracket)) trunc.upper = expr();
        } else {
          fail_expected({"','", "':'"});
        }
      }
      expect(YTok::RBracket);
      dist.truncation = std::move(trunc);
    }
    return dist;
  }

  std::vector<Expr> call_args() {
    expect(YTok::LParen);
    std::vector<Expr> args;
    while (!at(YTok::RParen)) {
      args.push_back(expr());
      if (at(YTok::Comma) || (at(YTok::Pipe) && args.size() == 1)) {
        advance();
        continue;
      }
      break;
    }
    if (!at(YTok::RParen)) fail_expected({"','", "')'"});
    advance();
    return args;
  }

  // ---- expressions (Python precedence)

  Expr expr() {
    const SourceSpan start = cur().span;
    Expr value = or_expr();
    if (at_name("if")) {
      advance();
      Expr cond = or_expr();
      expect_name("else");
      Expr otherwise = expr();
      return make_ternary(std::move(cond), std::move(value), std::move(otherwise), from(start));
    }
    return value;
  }

  Expr or_expr() {
    const SourceSpan start = cur().span;
    Expr lhs = and_expr();
    while (at_name("or")) {
      advance();
      lhs = make_binary(BinaryOp::Or, std::move(lhs), and_expr(), from(start));
    }
    return lhs;
  }

  Expr and_expr() {
    const SourceSpan start = cur().span;
    Expr lhs = not_expr();
    while (at_name("and")) {
      advance();
      lhs = make_binary(BinaryOp::And, std::move(lhs), not_expr(), from(start));
    }
    return lhs;
  }

  Expr not_expr() {
    if (at_name("not")) {
      const SourceSpan start = advance().span;
      Expr operand = not_expr();
      return make_unary(UnaryOp::Not, std::move(operand), from(start));
    }
    return comparison();
  }

  std::optional<BinaryOp> comparison_op() const {
    switch (cur().kind) {
      case YTok::EqEq: return BinaryOp::Eq;
      case YTok::NotEq: return BinaryOp::Neq;
      case YTok::Lt: return BinaryOp::Lt;
      case YTok::Le: return BinaryOp::Leq;
      case YTok::Gt: return BinaryOp::Gt;
      case YTok::Ge: return BinaryOp::Geq;
      default: return std::nullopt;
    }
  }

  Expr comparison() {
    const SourceSpan start = cur().span;
    Expr lhs = additive();
    if (auto op = comparison_op()) {
      advance();
      lhs = make_binary(*op, std::move(lhs), additive(), from(start));
      if (comparison_op()) {
        fail("chained comparisons are not supported; add parentheses", cur().span,
             codes::kUnsupported);
      }
    }
    return lhs;
  }

  Expr additive() {
    const SourceSpan start = cur().span;
    Expr lhs = multiplicative();
    while (at(YTok::Plus) || at(YTok::Minus)) {
      const BinaryOp op = advance().kind == YTok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = make_binary(op, std::move(lhs), multiplicative(), from(start));
    }
    return lhs;
  }

  Expr multiplicative() {
    const SourceSpan start = cur().span;
    Expr lhs = left_division();
    while (true) {
      BinaryOp op;
      switch (cur().kind) {
        case YTok::Star: op = BinaryOp::Mul; break;
        case YTok::Slash: op = BinaryOp::Div; break;
        case YTok::DoubleSlash: op = BinaryOp::IntDiv; break;
        case YTok::Percent: op = BinaryOp::Mod; break;
        default: return lhs;
      }
      advance();
      lhs = make_binary(op, std::move(lhs), left_division(), from(start));
    }
  }

  Expr left_division() {
    const SourceSpan start = cur().span;
    Expr lhs = elementwise();
    while (at(YTok::Backslash)) {
      advance();
      lhs = make_binary(BinaryOp::LeftDiv, std::move(lhs), elementwise(), from(start));
    }
    return lhs;
  }

  Expr elementwise() {
    const SourceSpan start = cur().span;
    Expr lhs = unary();
    while (at(YTok::EltMul) || at(YTok::EltDiv)) {
      const BinaryOp op = advance().kind == YTok::EltMul ? BinaryOp::EltMul : BinaryOp::EltDiv;
      lhs = make_binary(op, std::move(lhs), unary(), from(start));
    }
    return lhs;
  }

  Expr unary() {
    if (at(YTok::Minus) || at(YTok::Plus)) {
      const YToken& tok = advance();
      const UnaryOp op = tok.kind == YTok::Minus ? UnaryOp::Neg : UnaryOp::Plus;
      Expr operand = unary();
      return make_unary(op, std::move(operand), from(tok.span));
    }
    return power();
  }

  Expr power() {
    const SourceSpan start = cur().span;
    Expr base = postfix();
    if (at(YTok::DoubleStar)) {
      advance();
      Expr exponent = unary();
      return make_binary(BinaryOp::Pow, std::move(base), std::move(exponent), from(start));
    }
    return base;
  }

  Expr postfix() {
    const SourceSpan start = cur().span;
    Expr value = atom();
    while (true) {
      if (at(YTok::LBracket)) {
        value = make_index(std::move(value), indices(), from(start));
      } else if (at(YTok::Dot)) {
        if (peek().kind == YTok::Name && peek().text == "T") {
          advance();
          advance();
          value = make_transpose(std::move(value), from(start));
        } else {
          fail("attribute access is not supported (only '.T' for transposition)", peek().span,
               codes::kUnsupported);
        }
      } else {
        return value;
      }
    }
  }

  std::vector<Expr> indices() {
    expect(YTok::LBracket);
    std::vector<Expr> out;
    while (true) {
      const SourceSpan start = cur().span;
      std::optional<Expr> lo;
      if (!at(YTok::Colon)) lo = expr();
      if (at(YTok::Colon)) {
        advance();
        std::optional<Expr> hi;
        if (!at(YTok::Comma) && !at(YTok::RBracket)) hi = expr();
        out.push_back(make_range(std::move(lo), std::move(hi), from(start)));
      } else {
        out.push_back(std::move(*lo));
      }
      if (!at(YTok::Comma)) break;
      advance();
    }
    if (!at(YTok::RBracket)) fail_expected({"','", "']'"});
    advance();
    return out;
  }

  Expr atom() {
    const YToken& tok = cur();
    switch (tok.kind) {
      case YTok::Int: advance(); return make_int_text(tok.text, tok.span);
      case YTok::Real: advance(); return make_real(tok.text, tok.span);
      case YTok::String:
        if (!allow_strings_) {
          fail("string literals are only allowed as arguments of print() and reject()",
               tok.span);
        }
        advance();
        return make_string(tok.text, tok.span);
      case YTok::LParen: {
        advance();
        Expr inner = expr();
        expect(YTok::RParen);
        return inner;
      }
      case YTok::Name: {
        if (peek().kind == YTok::LParen) {
          if (is_surface_keyword(tok.text)) check_identifier(tok);
          if (is_stan_reserved(tok.text) && tok.text != "target") check_identifier(tok);
          advance();
          const bool strings = allow_strings_;
          std::vector<Expr> args = call_args();
          allow_strings_ = strings;
          return make_call(tok.text, std::move(args), from(tok.span));
        }
        check_identifier(tok);
        advance();
        return make_var(tok.text, tok.span);
      }
      default: fail_expected({"expression"});
    }
  }
};

}  // namespace

YapsParseResult parse_yaps(std::span<const YToken> tokens,
                           const std::optional<std::string>& model_name) {
  return Parser(tokens, model_name).run();
}

YapsParseResult parse_yaps_source(std::string_view source, std::string_view file,
                                  const std::optional<std::string>& model_name) {
  YapsLexResult lexed = lex_yaps(source, file);
  if (has_errors(lexed.diagnostics)) return YapsParseResult{std::nullopt, lexed.diagnostics};
  YapsParseResult parsed = parse_yaps(lexed.tokens, model_name);
  parsed.diagnostics.insert(parsed.diagnostics.begin(), lexed.diagnostics.begin(),
                            lexed.diagnostics.end());
  return parsed;
}

}  // namespace yaps
