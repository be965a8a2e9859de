#include "yaps/yaps_lexer.hpp"

#include <cctype>

namespace yaps {

std::string_view ytok_name(YTok kind) {
  switch (kind) {
    case YTok::Name: return "IDENT";
    case YTok::Int: return "INT";
    case YTok::Real: return "REAL";
    case YTok::String: return "STRING";
    case YTok::Newline: return "NEWLINE";
    case YTok::Indent: return "INDENT";
    case YTok::Dedent: return "DEDENT";
    case YTok::End: return "END";
    case YTok::LParen: return "LPAREN";
    case YTok::RParen: return "RPAREN";
    case YTok::LBracket: return "LBRACKET";
    case YTok::RBracket: return "RBRACKET";
    case YTok::LBrace: return "LBRACE";
    case YTok::RBrace: return "RBRACE";
    case YTok::Comma: return "COMMA";
    case YTok::Colon: return "COLON";
    case YTok::Semicolon: return "SEMICOLON";
    case YTok::Dot: return "DOT";
    case YTok::At: return "AT";
    case YTok::Arrow: return "ARROW";
    case YTok::Assign: return "ASSIGN";
    case YTok::PlusAssign: return "PLUS_ASSIGN";
    case YTok::MinusAssign: return "MINUS_ASSIGN";
    case YTok::StarAssign: return "STAR_ASSIGN";
    case YTok::SlashAssign: return "SLASH_ASSIGN";
    case YTok::Plus: return "PLUS";
    case YTok::Minus: return "MINUS";
    case YTok::Star: return "STAR";
    case YTok::Slash: return "SLASH";
    case YTok::DoubleSlash: return "DOUBLE_SLASH";
    case YTok::Percent: return "PERCENT";
    case YTok::DoubleStar: return "DOUBLE_STAR";
    case YTok::Backslash: return "BACKSLASH";
    case YTok::EltMul: return "ELT_MUL";
    case YTok::EltDiv: return "ELT_DIV";
    case YTok::Lt: return "LT";
    case YTok::Gt: return "GT";
    case YTok::Le: return "LE";
    case YTok::Ge: return "GE";
    case YTok::EqEq: return "EQ";
    case YTok::NotEq: return "NE";
    case YTok::Tilde: return "TILDE";
    case YTok::Sample: return "SAMPLE";
    case YTok::Pipe: return "PIPE";
    case YTok::Other: return "OTHER";
  }
  return "?";
}

std::string_view ytok_spelling(YTok kind) {
  switch (kind) {
    case YTok::LParen: return "(";
    case YTok::RParen: return ")";
    case YTok::LBracket: return "[";
    case YTok::RBracket: return "]";
    case YTok::LBrace: return "{";
    case YTok::RBrace: return "}";
    case YTok::Comma: return ",";
    case YTok::Colon: return ":";
    case YTok::Semicolon: return ";";
    case YTok::Dot: return ".";
    case YTok::At: return "@";
    case YTok::Arrow: return "->";
    case YTok::Assign: return "=";
    case YTok::PlusAssign: return "+=";
    case YTok::MinusAssign: return "-=";
    case YTok::StarAssign: return "*=";
    case YTok::SlashAssign: return "/=";
    case YTok::Plus: return "+";
    case YTok::Minus: return "-";
    case YTok::Star: return "*";
    case YTok::Slash: return "/";
    case YTok::DoubleSlash: return "//";
    case YTok::Percent: return "%";
    case YTok::DoubleStar: return "**";
    case YTok::Backslash: return "\\";
    case YTok::EltMul: return ".*";
    case YTok::EltDiv: return "./";
    case YTok::Lt: return "<";
    case YTok::Gt: return ">";
    case YTok::Le: return "<=";
    case YTok::Ge: return ">=";
    case YTok::EqEq: return "==";
    case YTok::NotEq: return "!=";
    case YTok::Tilde: return "~";
    case YTok::Sample: return "<~";
    case YTok::Pipe: return "|";
    case YTok::Name: return "identifier";
    case YTok::Int: return "integer";
    case YTok::Real: return "real number";
    case YTok::String: return "string";
    case YTok::Newline: return "end of line";
    case YTok::Indent: return "indented block";
    case YTok::Dedent: return "dedent";
    case YTok::End: return "end of input";
    case YTok::Other: return "operator";
  }
  return "?";
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view src, std::string_view file) : src_(src), file_(file) {}

  YapsLexResult run() {
    while (true) {
      if (at_line_start_ && depth_ == 0) {
        if (!indentation()) break;
      }
      if (eof()) break;
      const char c = peek();
      if (c == '\n') {
        if (depth_ == 0) {
          if (line_has_tokens_) push(YTok::Newline, "\n", line_, col_, line_, col_ + 1);
          line_has_tokens_ = false;
          at_line_start_ = true;
        }
        advance();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        advance();
        continue;
      }
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
        continue;
      }
      if (c == '\\') {
        std::size_t look = pos_ + 1;
        if (look < src_.size() && src_[look] == '\r') ++look;
        if (look < src_.size() && src_[look] == '\n') {
          while (pos_ <= look) advance();
          continue;
        }
      }
      token();
    }
    finish();
    return std::move(result_);
  }

 private:
  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
  bool at_line_start_ = true;
  bool line_has_tokens_ = false;
  std::vector<int> indents_{0};
  YapsLexResult result_;

  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan span(int l0, int c0, int l1, int c1) const { return {file_, l0, c0, l1, c1}; }

  void push(YTok kind, std::string text, int l0, int c0, int l1, int c1) {
    result_.tokens.push_back({kind, std::move(text), span(l0, c0, l1, c1)});
    if (kind != YTok::Newline && kind != YTok::Indent && kind != YTok::Dedent) {
      line_has_tokens_ = true;
    }
  }

  // Measures the indentation of the next non-blank line and emits
  // Indent/Dedent tokens. Returns false at end of input.
  bool indentation() {
    while (true) {
      int width = 0;
      while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\f')) {
        if (peek() == '\t') {
          width = (width / 8 + 1) * 8;
        } else if (peek() == ' ') {
          ++width;
        }
        advance();
      }
      if (eof()) return false;
      if (peek() == '\r') {
        advance();
        continue;
      }
      if (peek() == '#') {
        while (!eof() && peek() != '\n') advance();
      }
      if (eof()) return false;
      if (peek() == '\n') {
        advance();
        continue;
      }
      at_line_start_ = false;
      if (width > indents_.back()) {
        indents_.push_back(width);
        push(YTok::Indent, "", line_, col_, line_, col_);
      } else if (width < indents_.back()) {
        while (width < indents_.back()) {
          indents_.pop_back();
          push(YTok::Dedent, "", line_, col_, line_, col_);
        }
        if (width != indents_.back()) {
          result_.diagnostics.push_back(Diagnostic::error(
              codes::kIndent, "unindent does not match any outer indentation level",
              span(line_, 1, line_, col_)));
          indents_.push_back(width);
        }
      }
      return true;
    }
  }

  void finish() {
    // End-of-input position: on the last line, after its final character.
    int line = line_;
    int col = col_;
    if (!src_.empty() && src_.back() == '\n') {
      line = line_ - 1;
      const auto prev = src_.rfind('\n', src_.size() - 2);
      const std::size_t start = prev == std::string_view::npos ? 0 : prev + 1;
      col = static_cast<int>(src_.size() - 1 - start) + 1;
    }
    if (line_has_tokens_) push(YTok::Newline, "", line, col, line, col);
    while (indents_.size() > 1) {
      indents_.pop_back();
      push(YTok::Dedent, "", line, col, line, col);
    }
    push(YTok::End, "", line, col, line, col);
  }

  void token() {
    const int l0 = line_;
    const int c0 = col_;
    const std::size_t start = pos_;
    const char c = peek();

    auto emit = [&](YTok kind, int length) {
      for (int i = 0; i < length; ++i) advance();
      push(kind, std::string(src_.substr(start, pos_ - start)), l0, c0, line_, col_);
    };

    if (is_ident_start(c)) {
      while (!eof() && is_ident_char(peek())) advance();
      push(YTok::Name, std::string(src_.substr(start, pos_ - start)), l0, c0, line_, col_);
      return;
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      number(l0, c0, start);
      return;
    }
    if (c == '"' || c == '\'') {
      string_literal(l0, c0);
      return;
    }

    const char n = peek(1);
    switch (c) {
      case '(': ++depth_; return emit(YTok::LParen, 1);
      case '[': ++depth_; return emit(YTok::LBracket, 1);
      case '{': ++depth_; return emit(YTok::LBrace, 1);
      case ')': depth_ = std::max(0, depth_ - 1); return emit(YTok::RParen, 1);
      case ']': depth_ = std::max(0, depth_ - 1); return emit(YTok::RBracket, 1);
      case '}': depth_ = std::max(0, depth_ - 1); return emit(YTok::RBrace, 1);
      case ',': return emit(YTok::Comma, 1);
      case ':': return emit(YTok::Colon, 1);
      case ';': return emit(YTok::Semicolon, 1);
      case '@': return emit(YTok::At, 1);
      case '~': return emit(YTok::Tilde, 1);
      case '|': return emit(YTok::Pipe, 1);
      case '\\': return emit(YTok::Backslash, 1);
      case '.':
        if (n == '*') return emit(YTok::EltMul, 2);
        if (n == '/') return emit(YTok::EltDiv, 2);
        return emit(YTok::Dot, 1);
      case '<':
        if (n == '~') return emit(YTok::Sample, 2);
        if (n == '=') return emit(YTok::Le, 2);
        if (n == '<') return emit(YTok::Other, 2);
        return emit(YTok::Lt, 1);
      case '>':
        if (n == '=') return emit(YTok::Ge, 2);
        if (n == '>') return emit(YTok::Other, 2);
        return emit(YTok::Gt, 1);
      case '=':
        if (n == '=') return emit(YTok::EqEq, 2);
        return emit(YTok::Assign, 1);
      case '!':
        if (n == '=') return emit(YTok::NotEq, 2);
        break;
      case '+':
        if (n == '=') return emit(YTok::PlusAssign, 2);
        return emit(YTok::Plus, 1);
      case '-':
        if (n == '=') return emit(YTok::MinusAssign, 2);
        if (n == '>') return emit(YTok::Arrow, 2);
        return emit(YTok::Minus, 1);
      case '*':
        if (n == '*') return emit(peek(2) == '=' ? YTok::Other : YTok::DoubleStar,
                                  peek(2) == '=' ? 3 : 2);
        if (n == '=') return emit(YTok::StarAssign, 2);
        return emit(YTok::Star, 1);
      case '/':
        if (n == '/') return emit(peek(2) == '=' ? YTok::Other : YTok::DoubleSlash,
                                  peek(2) == '=' ? 3 : 2);
        if (n == '=') return emit(YTok::SlashAssign, 2);
        return emit(YTok::Slash, 1);
      case '%':
        if (n == '=') return emit(YTok::Other, 2);
        return emit(YTok::Percent, 1);
      case '&':
      case '^':
        return emit(YTok::Other, n == '=' ? 2 : 1);
      default:
        break;
    }
    advance();
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte " + std::to_string(static_cast<unsigned char>(c))
                            : std::string("'") + c + "'";
    result_.diagnostics.push_back(Diagnostic::error(
        codes::kIllegalChar, "illegal character " + shown, span(l0, c0, line_, col_)));
  }

  void number(int l0, int c0, std::size_t start) {
    bool real = false;
    while (is_digit(peek())) advance();
    const bool exponent_after_dot =
        (peek(1) == 'e' || peek(1) == 'E') &&
        (is_digit(peek(2)) || ((peek(2) == '+' || peek(2) == '-') && is_digit(peek(3))));
    if (peek() == '.' && peek(1) != '*' && peek(1) != '/' &&
        (!is_ident_start(peek(1)) || exponent_after_dot)) {
      real = true;
      advance();
      while (is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      real = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (is_digit(peek())) advance();
    }
    push(real ? YTok::Real : YTok::Int, std::string(src_.substr(start, pos_ - start)), l0, c0,
         line_, col_);
  }

  void string_literal(int l0, int c0) {
    const char quote = peek();
    const bool triple = peek(1) == quote && peek(2) == quote;
    const int open = triple ? 3 : 1;
    for (int i = 0; i < open; ++i) advance();
    const std::size_t body = pos_;
    while (true) {
      if (eof() || (!triple && peek() == '\n')) {
        result_.diagnostics.push_back(Diagnostic::error(
            codes::kSyntax, "unterminated string literal", span(l0, c0, l0, c0 + 1)));
        push(YTok::String, std::string(src_.substr(body, pos_ - body)), l0, c0, line_, col_);
        return;
      }
      if (peek() == '\\' && pos_ + 1 < src_.size()) {
        advance();
        advance();
        continue;
      }
      if (peek() == quote && (!triple || (peek(1) == quote && peek(2) == quote))) {
        const std::size_t stop = pos_;
        for (int i = 0; i < open; ++i) advance();
        push(YTok::String, std::string(src_.substr(body, stop - body)), l0, c0, line_, col_);
        return;
      }
      advance();
    }
  }
};

}  // namespace

YapsLexResult lex_yaps(std::string_view source, std::string_view file) {
  return Lexer(source, file).run();
}

}  // namespace yaps
