#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "yaps/diagnostic.hpp"
#include "yaps/source_span.hpp"

namespace yaps {

enum class STok {
  Name,
  Int,
  Real,
  String,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Lt,
  Gt,
  Le,
  Ge,
  EqEq,
  NotEq,
  Comma,
  Semicolon,
  Assign,
  PlusAssign,
  MinusAssign,
  StarAssign,
  SlashAssign,
  LeftArrow,  // deprecated `<-`
  Tilde,
  Question,
  Colon,
  Bang,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  IntDiv,  // %/%
  Backslash,
  Caret,
  Quote,   // transpose
  EltMul,
  EltDiv,
  OrOr,
  AndAnd,
  Pipe,
  End,
};

std::string_view stok_spelling(STok kind);

struct SToken {
  STok kind;
  std::string text;
  SourceSpan span;
};

struct StanLexResult {
  std::vector<SToken> tokens;  // always ends with End
  Diagnostics diagnostics;
};

/// Tokenizes Stan source. `//`, `/* */` and `#` comments are dropped.
StanLexResult lex_stan(std::string_view source, std::string_view file = "<input>");

}  // namespace yaps
