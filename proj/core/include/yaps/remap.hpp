#pragma once

#include <filesystem>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "yaps/diagnostic.hpp"
#include "yaps/source_map.hpp"

namespace yaps {

/// Ordered regular expressions that locate a message in generated Stan.
/// Group 1 is the line; group 2, when present, the column.
class LocationPatterns {
 public:
  struct Pattern {
    std::string source;
    std::regex regex;
  };

  /// One pattern per line; `#` comment lines and blank lines are skipped.
  /// Throws std::runtime_error for an invalid expression.
  static LocationPatterns parse(std::string_view text);
  static LocationPatterns load(const std::filesystem::path& path);
  /// The table shipped with the library (core/data/stanc_locations.txt).
  static const LocationPatterns& standard();

  const std::vector<Pattern>& patterns() const { return patterns_; }

 private:
  std::vector<Pattern> patterns_;
};

/// Maps messages of the external Stan compiler back to the surface source.
///
/// The text is split into blank-line separated paragraphs. A paragraph that
/// a pattern locates starts a message; unlocated paragraphs that follow it
/// belong to the same message. Each located message becomes a diagnostic
/// at the source span of the smallest map entry containing the location,
/// with the Stan position kept as a note; located messages outside the map
/// stay span-less. Unlocated text before the first located paragraph forms
/// one span-less diagnostic. Paragraphs starting with "Warning" give
/// warnings, everything else errors. `yaps_file`, when non-empty, replaces
/// the file recorded in the map.
Diagnostics remap_external(std::string_view stderr_text, const SourceMap& map,
                           const std::string& yaps_file = "",
                           const LocationPatterns& patterns = LocationPatterns::standard());

}  // namespace yaps
