#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace yaps {

/// Table of Stan library names (functions and distributions). Loaded from a
/// plain-text file: one identifier per line, `#` starts a comment.
class Builtins {
 public:
  Builtins() = default;

  static Builtins parse(std::string_view text);
  /// Throws std::runtime_error when the file cannot be read.
  static Builtins load(const std::filesystem::path& path);
  /// The table shipped with the library (core/data/builtins.txt).
  static const Builtins& standard();

  /// True for a listed name, or for a distribution name carrying one of
  /// the density/cdf/rng suffixes (`normal_lpdf`, `poisson_rng`).
  bool contains(std::string_view name) const;
  /// True when `name` can appear after `~`.
  bool is_distribution(std::string_view name) const;

  std::size_t size() const { return names_.size(); }

 private:
  std::unordered_set<std::string> names_;
};

/// Distribution suffixes accepted on builtin names.
std::string_view strip_distribution_suffix(std::string_view name);
/// Suffixes whose first argument is separated by `|` in Stan call syntax.
bool uses_conditional_bar(std::string_view function_name);

/// Words Stan reserves and so cannot name variables.
bool is_stan_reserved(std::string_view word);
/// Keywords of the Python-syntax surface language (`lambda`, `def`, ...).
bool is_surface_keyword(std::string_view word);

}  // namespace yaps
