#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "yaps/diagnostic.hpp"
#include "yaps/source_span.hpp"

namespace yaps {

enum class YTok {
  Name,
  Int,
  Real,
  String,
  Newline,
  Indent,
  Dedent,
  End,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Colon,
  Semicolon,
  Dot,
  At,
  Arrow,
  Assign,
  PlusAssign,
  MinusAssign,
  StarAssign,
  SlashAssign,
  Plus,
  Minus,
  Star,
  Slash,
  DoubleSlash,
  Percent,
  DoubleStar,
  Backslash,
  EltMul,
  EltDiv,
  Lt,
  Gt,
  Le,
  Ge,
  EqEq,
  NotEq,
  Tilde,
  Sample,
  Pipe,
  /// Valid Python operator with no meaning in the surface language.
  Other,
};

/// Upper-case display name used in tests and diagnostics (`SAMPLE`, `LPAREN`).
std::string_view ytok_name(YTok kind);
/// Source spelling for punctuation kinds (`<~`, `(`); the kind name otherwise.
std::string_view ytok_spelling(YTok kind);

struct YToken {
  YTok kind;
  std::string text;
  SourceSpan span;
};

struct YapsLexResult {
  std::vector<YToken> tokens;  // always terminated by End
  Diagnostics diagnostics;
};

/// Tokenizes surface source. `<~` with no intervening whitespace is a single
/// Sample token; leading whitespace becomes Indent/Dedent tokens following
/// the offside rule (tabs advance to the next multiple of 8). Newlines
/// inside brackets and after a line-continuation backslash are ignored,
/// as are blank and comment-only lines.
YapsLexResult lex_yaps(std::string_view source, std::string_view file = "<input>");

}  // namespace yaps
