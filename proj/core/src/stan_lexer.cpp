#include "yaps/stan_lexer.hpp"

#include <array>
#include <utility>

namespace yaps {

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Longest operators first.
constexpr std::array<std::pair<std::string_view, STok>, 37> kOperators{{
    {"%/%", STok::IntDiv}, {"<=", STok::Le},        {">=", STok::Ge},
    {"==", STok::EqEq},    {"!=", STok::NotEq},     {"+=", STok::PlusAssign},
    {"-=", STok::MinusAssign}, {"*=", STok::StarAssign}, {"/=", STok::SlashAssign},
    {"<-", STok::LeftArrow}, {".*", STok::EltMul},  {"./", STok::EltDiv},
    {"||", STok::OrOr},    {"&&", STok::AndAnd},    {"{", STok::LBrace},
    {"}", STok::RBrace},   {"(", STok::LParen},     {")", STok::RParen},
    {"[", STok::LBracket}, {"]", STok::RBracket},   {"<", STok::Lt},
    {">", STok::Gt},       {",", STok::Comma},      {";", STok::Semicolon},
    {"=", STok::Assign},   {"~", STok::Tilde},      {"?", STok::Question},
    {":", STok::Colon},    {"!", STok::Bang},       {"+", STok::Plus},
    {"-", STok::Minus},    {"*", STok::Star},       {"/", STok::Slash},
    {"%", STok::Percent},  {"\\", STok::Backslash}, {"^", STok::Caret},
    {"'", STok::Quote},
}};

class StanLexer {
 public:
  StanLexer(std::string_view src, std::string_view file) : src_(src), file_(file) {}

  StanLexResult run() {
    while (true) {
      skip_space_and_comments();
      if (eof()) break;
      token();
    }
    // End of input sits just after the last token so its span stays in the text.
    SourceSpan end = SourceSpan::point(file_, 1, 1);
    if (!result_.tokens.empty()) {
      const SourceSpan& last = result_.tokens.back().span;
      end = SourceSpan::point(file_, last.end_line, last.end_col);
    }
    result_.tokens.push_back({STok::End, "", end});
    return std::move(result_);
  }

 private:
  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  StanLexResult result_;

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

  void skip_space_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        advance();
      } else if (c == '#' || (c == '/' && peek(1) == '/')) {
        while (!eof() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const int l0 = line_;
        const int c0 = col_;
        advance();
        advance();
        while (!eof() && !(peek() == '*' && peek(1) == '/')) advance();
        if (eof()) {
          result_.diagnostics.push_back(Diagnostic::error(
              codes::kSyntax, "unterminated comment", SourceSpan{file_, l0, c0, l0, c0 + 2}));
          return;
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  void push(STok kind, std::size_t start, int l0, int c0) {
    result_.tokens.push_back({kind, std::string(src_.substr(start, pos_ - start)),
                              SourceSpan{file_, l0, c0, line_, col_}});
  }

  void token() {
    const int l0 = line_;
    const int c0 = col_;
    const std::size_t start = pos_;
    const char c = peek();
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) advance();
      return push(STok::Name, start, l0, c0);
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(start, l0, c0);
    if (c == '"') {
      advance();
      while (!eof() && peek() != '"' && peek() != '\n') advance();
      if (peek() != '"') {
        result_.diagnostics.push_back(Diagnostic::error(
            codes::kSyntax, "unterminated string literal", SourceSpan{file_, l0, c0, l0, c0 + 1}));
        return;
      }
      advance();
      SToken tok{STok::String, std::string(src_.substr(start + 1, pos_ - start - 2)),
                 SourceSpan{file_, l0, c0, line_, col_}};
      result_.tokens.push_back(std::move(tok));
      return;
    }
    if (c == '|' && peek(1) != '|') {
      advance();
      return push(STok::Pipe, start, l0, c0);
    }
    for (const auto& [text, kind] : kOperators) {
      if (src_.substr(pos_, text.size()) == text) {
        for (std::size_t i = 0; i < text.size(); ++i) advance();
        return push(kind, start, l0, c0);
      }
    }
    advance();
    const std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                  ? "byte " + std::to_string(static_cast<unsigned char>(c))
                                  : std::string("'") + c + "'";
    result_.diagnostics.push_back(Diagnostic::error(codes::kIllegalChar, "illegal character " + shown,
                                                    SourceSpan{file_, l0, c0, line_, col_}));
  }

  void number(std::size_t start, int l0, int c0) {
    bool real = false;
    while (is_digit(peek())) advance();
    if (peek() == '.' && peek(1) != '*' && peek(1) != '/') {
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
    push(real ? STok::Real : STok::Int, start, l0, c0);
  }
};

}  // namespace

std::string_view stok_spelling(STok kind) {
  switch (kind) {
    case STok::Name: return "identifier";
    case STok::Int: return "integer literal";
    case STok::Real: return "real literal";
    case STok::String: return "string literal";
    case STok::Pipe: return "|";
    case STok::End: return "end of input";
    default: break;
  }
  for (const auto& [text, k] : kOperators) {
    if (k == kind) return text;
  }
  return "?";
}

StanLexResult lex_stan(std::string_view source, std::string_view file) {
  return StanLexer(source, file).run();
}

}  // namespace yaps
