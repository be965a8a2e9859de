#pragma once

#include <compare>
#include <string>

namespace yaps {

/// A region of a source document. Lines and columns are 1-based; the end
/// position is exclusive, so a one-character token at column 5 spans
/// [5, 6). Zero-width spans (start == end) mark insertion points such as
/// end of file.
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  static SourceSpan point(std::string file, int line, int col) {
    return {std::move(file), line, col, line, col};
  }

  /// Smallest span covering both; the file is taken from `a`.
  static SourceSpan cover(const SourceSpan& a, const SourceSpan& b);

  bool valid() const;
  bool single_line() const { return start_line == end_line; }

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

std::string to_string(const SourceSpan& span);

}  // namespace yaps
