#include "yaps/stan_parser.hpp"

#include <algorithm>
#include <set>

#include "yaps/builtins.hpp"
#include "yaps/stan_lexer.hpp"

namespace yaps {

namespace {

struct ParseError {
  Diagnostic diagnostic;
};

const std::set<std::string_view, std::less<>> kDeprecatedFunctions = {
    "increment_log_prob", "get_lp", "if_else", "integrate_ode", "integrate_ode_rk45",
    "integrate_ode_bdf",
};

const std::set<std::string_view, std::less<>> kUnsupportedTypes = {
    "complex", "complex_vector", "complex_row_vector", "complex_matrix", "tuple",
};

bool is_type_keyword(std::string_view word) {
  return word == "array" || base_type_from_name(word).has_value();
}

std::string describe(const SToken& tok) {
  switch (tok.kind) {
    case STok::Name: return "'" + tok.text + "'";
    case STok::Int:
    case STok::Real: return "number " + tok.text;
    case STok::String: return "string literal";
    case STok::End: return "end of input";
    default: return "'" + tok.text + "'";
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

class StanParser {
 public:
  explicit StanParser(std::vector<SToken> tokens) : toks_(std::move(tokens)) {}

  Program run() {
    Program program;
    int previous = -1;
    while (!at(STok::End)) {
      const SourceSpan start = cur().span;
      const BlockKind kind = block_header();
      const int order = static_cast<int>(kind);
      if (order == previous) fail("duplicate " + std::string(block_stan_name(kind)) + " block", from(start));
      if (order < previous) {
        fail("the " + std::string(block_stan_name(kind)) + " block is out of order", from(start));
      }
      previous = order;
      expect(STok::LBrace);
      if (kind == BlockKind::Functions) {
        std::vector<FunctionDef> functions;
        while (!at(STok::RBrace)) {
          if (at(STok::End)) fail_expected({"'}'"});
          functions.push_back(function_def());
        }
        advance();
        program.functions = std::move(functions);
        continue;
      }
      std::vector<Stmt> body;
      while (!at(STok::RBrace)) {
        if (at(STok::End)) fail_expected({"'}'"});
        if (auto s = statement()) {
          if (kind == BlockKind::Data || kind == BlockKind::Parameters) {
            const auto* d = std::get_if<Declare>(&s->node);
            if (!d || d->init) {
              fail("only declarations without initial values are allowed in the " +
                       std::string(block_stan_name(kind)) + " block",
                   *s->span);
            }
          }
          body.push_back(std::move(*s));
        }
      }
      advance();
      program.blocks[kind] = std::move(body);
    }
    return program;
  }

 private:
  std::vector<SToken> toks_;
  std::size_t pos_ = 0;
  SourceSpan last_;
  bool allow_strings_ = false;

  const SToken& cur() const { return toks_[pos_]; }
  const SToken& peek(std::size_t ahead = 1) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(STok kind) const { return cur().kind == kind; }
  bool at_name(std::string_view text) const { return at(STok::Name) && cur().text == text; }

  const SToken& advance() {
    const SToken& tok = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    last_ = tok.span;
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

  const SToken& expect(STok kind) {
    if (!at(kind)) fail_expected({"'" + std::string(stok_spelling(kind)) + "'"});
    return advance();
  }

  const SToken& identifier(std::string_view what) {
    if (!at(STok::Name)) fail_expected({std::string(what)});
    check_identifier(cur());
    return advance();
  }

  void check_identifier(const SToken& tok) {
    if (tok.text == "lp__") {
      fail("'lp__' is deprecated; use target() or target +=", tok.span, codes::kDeprecated);
    }
    if (is_stan_reserved(tok.text)) {
      fail("'" + tok.text + "' is a reserved word and cannot be used as an identifier", tok.span,
           codes::kReserved);
    }
  }

  // ---- blocks

  BlockKind block_header() {
    if (!at(STok::Name)) fail_expected({"block name"});
    const SToken& tok = advance();
    if (tok.text == "functions") return BlockKind::Functions;
    if (tok.text == "data") return BlockKind::Data;
    if (tok.text == "parameters") return BlockKind::Parameters;
    if (tok.text == "model") return BlockKind::Model;
    if (tok.text == "transformed") {
      if (at_name("data")) {
        advance();
        return BlockKind::TransformedData;
      }
      if (at_name("parameters")) {
        advance();
        return BlockKind::TransformedParameters;
      }
      fail_expected({"'data'", "'parameters'"});
    }
    if (tok.text == "generated") {
      if (!at_name("quantities")) fail_expected({"'quantities'"});
      advance();
      return BlockKind::GeneratedQuantities;
    }
    fail("unknown block '" + tok.text + "'", tok.span);
  }

  // ---- functions

  ArgType arg_type() {
    int rank = 0;
    bool new_style = false;
    if (at_name("array")) {
      new_style = true;
      advance();
      rank = unsized_dims();
    }
    if (!at(STok::Name)) fail_expected({"type"});
    const SToken& tok = advance();
    if (kUnsupportedTypes.contains(tok.text)) {
      fail("type '" + tok.text + "' is not supported", tok.span, codes::kUnsupported);
    }
    auto base = base_type_from_name(tok.text);
    if (!base || (*base != BaseType::Int && *base != BaseType::Real && *base != BaseType::Vector &&
                  *base != BaseType::RowVector && *base != BaseType::Matrix)) {
      fail("'" + tok.text + "' is not a function argument type", tok.span);
    }
    if (!new_style && at(STok::LBracket)) rank = unsized_dims();
    return ArgType{*base, rank};
  }

  int unsized_dims() {
    expect(STok::LBracket);
    int rank = 1;
    while (at(STok::Comma)) {
      advance();
      ++rank;
    }
    expect(STok::RBracket);
    return rank;
  }

  FunctionDef function_def() {
    const SourceSpan start = cur().span;
    FunctionDef fn;
    if (at_name("void")) {
      advance();
    } else {
      fn.return_type = arg_type();
    }
    fn.name = identifier("function name").text;
    expect(STok::LParen);
    while (!at(STok::RParen)) {
      if (at_name("data")) {
        fail("the 'data' argument qualifier is not supported", cur().span, codes::kUnsupported);
      }
      ArgType type = arg_type();
      const SToken& name = identifier("argument name");
      fn.params.push_back(FunctionParam{name.text, type});
      if (!at(STok::Comma)) break;
      advance();
    }
    expect(STok::RParen);
    fn.span = from(start);
    if (at(STok::Semicolon)) {
      fail("forward declarations are not supported", from(start), codes::kUnsupported);
    }
    expect(STok::LBrace);
    fn.body = block_body();
    return fn;
  }

  // Statements up to and including the closing brace.
  std::vector<Stmt> block_body() {
    std::vector<Stmt> body;
    while (!at(STok::RBrace)) {
      if (at(STok::End)) fail_expected({"'}'"});
      if (auto s = statement()) body.push_back(std::move(*s));
    }
    advance();
    return body;
  }

  // Body of a loop or branch: braces are transparent.
  std::vector<Stmt> nested_body() {
    if (at(STok::LBrace)) {
      advance();
      return block_body();
    }
    std::vector<Stmt> body;
    if (auto s = statement()) body.push_back(std::move(*s));
    return body;
  }

  // ---- declarations

  std::vector<Expr> expr_list(STok close) {
    std::vector<Expr> out;
    while (true) {
      out.push_back(expr());
      if (!at(STok::Comma)) break;
      advance();
    }
    if (!at(close)) fail_expected({"','", "'" + std::string(stok_spelling(close)) + "'"});
    advance();
    return out;
  }

  Stmt declaration() {
    const SourceSpan start = cur().span;
    StanType type;
    bool new_style = false;
    if (at_name("array")) {
      new_style = true;
      advance();
      expect(STok::LBracket);
      type.array_dims = expr_list(STok::RBracket);
    }
    if (!at(STok::Name)) fail_expected({"type"});
    const SToken& tok = advance();
    if (kUnsupportedTypes.contains(tok.text)) {
      fail("type '" + tok.text + "' is not supported", tok.span, codes::kUnsupported);
    }
    auto base = base_type_from_name(tok.text);
    if (!base) fail("unknown type '" + tok.text + "'", tok.span);
    type.base = *base;
    if (at(STok::Lt)) {
      advance();
      while (true) {
        if (!at(STok::Name)) fail_expected({"'lower'", "'upper'"});
        const SToken& key = advance();
        if (key.text == "offset" || key.text == "multiplier") {
          fail("offset/multiplier constraints are not supported", key.span, codes::kUnsupported);
        }
        expect(STok::Assign);
        if (key.text == "lower" && !type.lower) {
          type.lower = additive();
        } else if (key.text == "upper" && !type.upper) {
          type.upper = additive();
        } else {
          fail("unexpected constraint '" + key.text + "'", key.span);
        }
        if (!at(STok::Comma)) break;
        advance();
      }
      expect(STok::Gt);
      if (!admits_bounds(type.base)) {
        fail("type '" + tok.text + "' does not take lower/upper bounds", from(tok.span));
      }
    }
    const auto [min_dims, max_dims] = type_dim_arity(type.base);
    if (max_dims > 0) {
      expect(STok::LBracket);
      type.type_dims = expr_list(STok::RBracket);
      const int n = static_cast<int>(type.type_dims.size());
      if (n < min_dims || n > max_dims) {
        fail("wrong number of sizes for type '" + tok.text + "'", from(tok.span));
      }
    }
    const SToken& name = identifier("variable name");
    if (at(STok::LBracket)) {
      if (new_style) fail("array dimensions given twice", cur().span);
      advance();
      type.array_dims = expr_list(STok::RBracket);
    }
    Declare decl{Decl{name.text, std::move(type), name.span}, std::nullopt};
    if (at(STok::Assign)) {
      advance();
      decl.init = expr();
    } else if (at(STok::LeftArrow)) {
      fail("'<-' is deprecated; use '='", cur().span, codes::kDeprecated);
    }
    expect(STok::Semicolon);
    return make_stmt(std::move(decl), from(start));
  }

  // ---- statements

  std::optional<Stmt> statement() {
    const SourceSpan start = cur().span;
    if (at(STok::Semicolon)) {
      advance();
      return std::nullopt;
    }
    if (at(STok::LBrace)) {
      advance();
      LocalBlock block{block_body()};
      return make_stmt(std::move(block), from(start));
    }
    if (at(STok::Name)) {
      const std::string& word = cur().text;
      if (word == "for") return for_stmt();
      if (word == "while") {
        advance();
        expect(STok::LParen);
        Expr cond = expr();
        expect(STok::RParen);
        const SourceSpan header = from(start);
        return make_stmt(While{std::move(cond), nested_body()}, header);
      }
      if (word == "if") return if_stmt();
      if (word == "break" || word == "continue") {
        const bool is_break = advance().text == "break";
        expect(STok::Semicolon);
        if (is_break) return make_stmt(Break{}, from(start));
        return make_stmt(Continue{}, from(start));
      }
      if (word == "return") {
        advance();
        Return ret;
        if (!at(STok::Semicolon)) ret.value = expr();
        expect(STok::Semicolon);
        return make_stmt(std::move(ret), from(start));
      }
      if ((word == "print" || word == "reject") && peek().kind == STok::LParen) {
        const bool is_print = advance().text == "print";
        advance();
        allow_strings_ = true;
        std::vector<Expr> args = expr_list(STok::RParen);
        allow_strings_ = false;
        expect(STok::Semicolon);
        if (is_print) return make_stmt(Print{std::move(args)}, from(start));
        return make_stmt(Reject{std::move(args)}, from(start));
      }
      if (word == "target" && peek().kind == STok::PlusAssign) {
        advance();
        advance();
        Expr value = expr();
        expect(STok::Semicolon);
        return make_stmt(TargetIncrement{std::move(value)}, from(start));
      }
      if (word == "profile") {
        fail("profile blocks are not supported", cur().span, codes::kUnsupported);
      }
      if (kUnsupportedTypes.contains(word)) {
        fail("type '" + word + "' is not supported", cur().span, codes::kUnsupported);
      }
      if (is_type_keyword(word) && peek().kind != STok::LParen) return declaration();
    }

    check_arrow_assignment();
    Expr lhs = expr();
    if (at(STok::Tilde)) {
      advance();
      DistCall dist = dist_call();
      expect(STok::Semicolon);
      return make_stmt(Sample{std::move(lhs), std::move(dist)}, from(start));
    }
    if (at(STok::LeftArrow)) {
      fail("'<-' is deprecated; use '='", cur().span, codes::kDeprecated);
    }
    std::optional<AssignOp> op;
    switch (cur().kind) {
      case STok::Assign: op = AssignOp::Set; break;
      case STok::PlusAssign: op = AssignOp::Add; break;
      case STok::MinusAssign: op = AssignOp::Sub; break;
      case STok::StarAssign: op = AssignOp::Mul; break;
      case STok::SlashAssign: op = AssignOp::Div; break;
      default: break;
    }
    if (op) {
      if (!is_lvalue(lhs)) {
        fail("the left-hand side of an assignment must be a variable or an indexed variable",
             lhs.span.value_or(cur().span));
      }
      advance();
      Expr rhs = expr();
      expect(STok::Semicolon);
      return make_stmt(Assign{std::move(lhs), *op, std::move(rhs)}, from(start));
    }
    if (auto* call = std::get_if<Call>(&lhs.node)) {
      expect(STok::Semicolon);
      return make_stmt(CallStmt{std::move(*call)}, from(start));
    }
    fail_expected({"'~'", "'='", "a compound assignment", "';'"});
  }

  // `x[i] <- e;` is the retired assignment syntax, not `x[i] < -e`.
  void check_arrow_assignment() {
    if (!at(STok::Name)) return;
    std::size_t k = pos_ + 1;
    while (k < toks_.size() && toks_[k].kind == STok::LBracket) {
      int depth = 0;
      for (; k < toks_.size(); ++k) {
        if (toks_[k].kind == STok::LBracket) ++depth;
        if (toks_[k].kind == STok::RBracket && --depth == 0) break;
        if (toks_[k].kind == STok::End) return;
      }
      ++k;
    }
    if (k < toks_.size() && toks_[k].kind == STok::LeftArrow) {
      fail("'<-' is deprecated; use '='", toks_[k].span, codes::kDeprecated);
    }
  }

  Stmt for_stmt() {
    const SourceSpan start = advance().span;
    expect(STok::LParen);
    const SToken& var = identifier("loop variable");
    if (!at_name("in")) fail_expected({"'in'"});
    advance();
    Expr lower_bound = expr();
    if (!at(STok::Colon)) {
      fail("loops over containers are not supported; use an index range 'a:b'",
           from(start), codes::kUnsupported);
    }
    advance();
    Expr upper_bound = expr();
    expect(STok::RParen);
    const SourceSpan header = from(start);
    For loop{var.text, std::move(lower_bound), std::move(upper_bound), nested_body()};
    return make_stmt(std::move(loop), header);
  }

  Stmt if_stmt() {
    const SourceSpan start = advance().span;
    expect(STok::LParen);
    Expr cond = expr();
    expect(STok::RParen);
    const SourceSpan header = from(start);
    If node{std::move(cond), nested_body(), std::nullopt};
    if (at_name("else")) {
      advance();
      if (at_name("if")) {
        std::vector<Stmt> chain;
        chain.push_back(if_stmt());
        node.else_body = std::move(chain);
      } else {
        node.else_body = nested_body();
      }
    }
    return make_stmt(std::move(node), header);
  }

  DistCall dist_call() {
    if (!at(STok::Name)) fail_expected({"distribution name"});
    const SToken& name = advance();
    check_deprecated_call(name);
    DistCall dist{name.text, call_args(), std::nullopt};
    if (at_name("T") && peek().kind == STok::LBracket) {
      const SourceSpan start = advance().span;
      advance();
      DistCall::Truncation trunc;
      if (!at(STok::Comma)) trunc.lower = expr();
      expect(STok::Comma);
      if (!at(STok::RBracket)) trunc.upper = expr();
      expect(STok::RBracket);
      if (!trunc.lower && !trunc.upper) fail("a truncation needs at least one bound", from(start));
      dist.truncation = std::move(trunc);
    }
    return dist;
  }

  void check_deprecated_call(const SToken& name) {
    const std::string& n = name.text;
    const bool old_suffix = n.ends_with("_cdf_log") || n.ends_with("_ccdf_log");
    if (kDeprecatedFunctions.contains(n) || old_suffix) {
      fail("'" + n + "' is deprecated", name.span, codes::kDeprecated);
    }
  }

  std::vector<Expr> call_args() {
    expect(STok::LParen);
    std::vector<Expr> args;
    while (!at(STok::RParen)) {
      args.push_back(expr());
      if (at(STok::Comma) || (at(STok::Pipe) && args.size() == 1)) {
        advance();
        continue;
      }
      break;
    }
    if (!at(STok::RParen)) fail_expected({"','", "')'"});
    advance();
    return args;
  }

  // ---- expressions

  Expr expr() {
    const SourceSpan start = cur().span;
    Expr cond = or_expr();
    if (at(STok::Question)) {
      advance();
      Expr then_expr = expr();
      expect(STok::Colon);
      Expr else_expr = expr();
      return make_ternary(std::move(cond), std::move(then_expr), std::move(else_expr), from(start));
    }
    return cond;
  }

  template <typename Next>
  Expr left_assoc(Next next, std::initializer_list<std::pair<STok, BinaryOp>> ops) {
    const SourceSpan start = cur().span;
    Expr lhs = (this->*next)();
    while (true) {
      const auto it = std::find_if(ops.begin(), ops.end(),
                                   [&](const auto& p) { return p.first == cur().kind; });
      if (it == ops.end()) return lhs;
      advance();
      Expr rhs = (this->*next)();
      lhs = make_binary(it->second, std::move(lhs), std::move(rhs), from(start));
    }
  }

  Expr or_expr() { return left_assoc(&StanParser::and_expr, {{STok::OrOr, BinaryOp::Or}}); }
  Expr and_expr() { return left_assoc(&StanParser::equality, {{STok::AndAnd, BinaryOp::And}}); }
  Expr equality() {
    return left_assoc(&StanParser::relational,
                      {{STok::EqEq, BinaryOp::Eq}, {STok::NotEq, BinaryOp::Neq}});
  }

  Expr relational() {
    const SourceSpan start = cur().span;
    Expr lhs = additive();
    while (true) {
      BinaryOp op;
      switch (cur().kind) {
        case STok::Lt: op = BinaryOp::Lt; break;
        case STok::Le: op = BinaryOp::Leq; break;
        case STok::Gt: op = BinaryOp::Gt; break;
        case STok::Ge: op = BinaryOp::Geq; break;
        case STok::LeftArrow: {
          // `a<-1` inside an expression is `a < -1`.
          SToken& tok = toks_[pos_];
          last_ = SourceSpan{tok.span.file, tok.span.start_line, tok.span.start_col,
                             tok.span.start_line, tok.span.start_col + 1};
          tok = SToken{STok::Minus, "-",
                       SourceSpan{tok.span.file, tok.span.start_line, tok.span.start_col + 1,
                                  tok.span.end_line, tok.span.end_col}};
          Expr rhs = additive();
          lhs = make_binary(BinaryOp::Lt, std::move(lhs), std::move(rhs), from(start));
          continue;
        }
        default: return lhs;
      }
      advance();
      Expr rhs = additive();
      lhs = make_binary(op, std::move(lhs), std::move(rhs), from(start));
    }
  }

  Expr additive() {
    return left_assoc(&StanParser::multiplicative,
                      {{STok::Plus, BinaryOp::Add}, {STok::Minus, BinaryOp::Sub}});
  }
  Expr multiplicative() {
    return left_assoc(&StanParser::left_division,
                      {{STok::Star, BinaryOp::Mul},
                       {STok::Slash, BinaryOp::Div},
                       {STok::Percent, BinaryOp::Mod},
                       {STok::IntDiv, BinaryOp::IntDiv}});
  }
  Expr left_division() {
    return left_assoc(&StanParser::elementwise, {{STok::Backslash, BinaryOp::LeftDiv}});
  }
  Expr elementwise() {
    return left_assoc(&StanParser::unary,
                      {{STok::EltMul, BinaryOp::EltMul}, {STok::EltDiv, BinaryOp::EltDiv}});
  }

  Expr unary() {
    if (at(STok::Minus) || at(STok::Plus) || at(STok::Bang)) {
      const SToken& tok = advance();
      const UnaryOp op = tok.kind == STok::Minus  ? UnaryOp::Neg
                         : tok.kind == STok::Plus ? UnaryOp::Plus
                                                  : UnaryOp::Not;
      const SourceSpan start = tok.span;
      Expr operand = unary();
      return make_unary(op, std::move(operand), from(start));
    }
    return power();
  }

  Expr power() {
    const SourceSpan start = cur().span;
    Expr base = postfix();
    if (at(STok::Caret)) {
      advance();
      Expr exponent = unary();
      return make_binary(BinaryOp::Pow, std::move(base), std::move(exponent), from(start));
    }
    return base;
  }

  Expr postfix() {
    const SourceSpan start = cur().span;
    Expr value = primary();
    while (true) {
      if (at(STok::LBracket)) {
        advance();
        value = make_index(std::move(value), indices(), from(start));
      } else if (at(STok::Quote)) {
        advance();
        value = make_transpose(std::move(value), from(start));
      } else {
        return value;
      }
    }
  }

  std::vector<Expr> indices() {
    std::vector<Expr> out;
    while (true) {
      const SourceSpan start = cur().span;
      std::optional<Expr> lo;
      if (!at(STok::Colon)) lo = expr();
      if (at(STok::Colon)) {
        advance();
        std::optional<Expr> hi;
        if (!at(STok::Comma) && !at(STok::RBracket)) hi = expr();
        out.push_back(make_range(std::move(lo), std::move(hi), from(start)));
      } else {
        out.push_back(std::move(*lo));
      }
      if (!at(STok::Comma)) break;
      advance();
    }
    expect(STok::RBracket);
    return out;
  }

  Expr primary() {
    const SToken& tok = cur();
    switch (tok.kind) {
      case STok::Int: advance(); return make_int_text(tok.text, tok.span);
      case STok::Real: advance(); return make_real(tok.text, tok.span);
      case STok::String:
        if (!allow_strings_) fail("string literals are only allowed in print and reject", tok.span);
        advance();
        return make_string(tok.text, tok.span);
      case STok::LParen: {
        advance();
        const bool strings = allow_strings_;
        allow_strings_ = false;
        Expr inner = expr();
        allow_strings_ = strings;
        expect(STok::RParen);
        return inner;
      }
      case STok::LBrace:
        fail("array expressions are not supported", tok.span, codes::kUnsupported);
      case STok::LBracket:
        fail("row vector expressions are not supported", tok.span, codes::kUnsupported);
      case STok::Name: {
        if (peek().kind == STok::LParen) {
          check_deprecated_call(tok);
          if (tok.text != "target" && is_stan_reserved(tok.text)) check_identifier(tok);
          advance();
          const bool strings = allow_strings_;
          allow_strings_ = false;
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

StanParseResult parse_stan(std::string_view source, std::string_view file) {
  StanLexResult lexed = lex_stan(source, file);
  if (has_errors(lexed.diagnostics)) return StanParseResult{std::nullopt, lexed.diagnostics};
  StanParseResult result;
  try {
    result.program = StanParser(std::move(lexed.tokens)).run();
  } catch (ParseError& e) {
    result.diagnostics.push_back(std::move(e.diagnostic));
  }
  return result;
}

std::string_view failure_cause_name(FailureCause cause) {
  switch (cause) {
    case FailureCause::DeprecatedSyntax: return "DeprecatedSyntax";
    case FailureCause::Unsupported: return "Unsupported";
    case FailureCause::SyntaxError: return "SyntaxError";
  }
  return "";
}

FailureCause classify_failure(std::span<const Diagnostic> diagnostics) {
  auto any = [&](std::string_view code) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [&](const Diagnostic& d) { return d.code == code; });
  };
  if (any(codes::kDeprecated)) return FailureCause::DeprecatedSyntax;
  if (any(codes::kUnsupported)) return FailureCause::Unsupported;
  return FailureCause::SyntaxError;
}

}  // namespace yaps
