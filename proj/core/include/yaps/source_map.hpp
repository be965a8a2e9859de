#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "yaps/source_span.hpp"

namespace yaps {

/// One emitted line segment and the source text it came from.
struct SourceMapEntry {
  int target_line = 1;
  int target_col_start = 1;
  int target_col_end = 1;  // exclusive
  SourceSpan source;
  friend bool operator==(const SourceMapEntry&, const SourceMapEntry&) = default;
};

/// Entries ordered by target position, one per emitted statement line.
struct SourceMap {
  std::vector<SourceMapEntry> entries;
  friend bool operator==(const SourceMap&, const SourceMap&) = default;
};

/// `[{"target": {"line", "col_start", "col_end"},
///    "source": {"file", "line", "col_start", "col_end", "end_line"}}]`
std::string source_map_to_json(const SourceMap& map);
/// Throws std::runtime_error on malformed input.
SourceMap source_map_from_json(std::string_view text);

}  // namespace yaps
