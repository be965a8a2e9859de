#include "yaps/builtins.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace yaps {

namespace detail {
extern const std::string_view kBuiltinsText;
}

namespace {

constexpr std::array<std::string_view, 8> kDistSuffixes = {
    "_lpdf", "_lupdf", "_lpmf", "_lupmf", "_lcdf", "_lccdf", "_cdf", "_rng"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Builtins Builtins::parse(std::string_view text) {
  Builtins table;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) table.names_.emplace(line);
  }
  return table;
}

Builtins Builtins::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read builtin table '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const Builtins& Builtins::standard() {
  static const Builtins table = parse(detail::kBuiltinsText);
  return table;
}

bool Builtins::contains(std::string_view name) const {
  if (names_.contains(std::string(name))) return true;
  const auto base = strip_distribution_suffix(name);
  return base.size() != name.size() && names_.contains(std::string(base));
}

bool Builtins::is_distribution(std::string_view name) const {
  return names_.contains(std::string(name));
}

std::string_view strip_distribution_suffix(std::string_view name) {
  for (auto suffix : kDistSuffixes) {
    if (name.size() > suffix.size() && name.ends_with(suffix)) {
      return name.substr(0, name.size() - suffix.size());
    }
  }
  return name;
}

bool uses_conditional_bar(std::string_view function_name) {
  for (auto suffix : {"_lpdf", "_lupdf", "_lpmf", "_lupmf", "_lcdf", "_lccdf", "_cdf"}) {
    if (function_name.ends_with(suffix) &&
        function_name.size() > std::string_view(suffix).size())
      return true;
  }
  return false;
}

bool is_stan_reserved(std::string_view word) {
  static const std::unordered_set<std::string_view> kReserved = {
      "for", "in", "while", "repeat", "until", "if", "then", "else", "true", "false",
      "int", "real", "vector", "simplex", "unit_vector", "ordered", "positive_ordered",
      "row_vector", "matrix", "cholesky_factor_corr", "cholesky_factor_cov",
      "corr_matrix", "cov_matrix", "functions", "model", "data", "parameters",
      "quantities", "transformed", "generated", "void", "return", "break", "continue",
      "target", "print", "reject", "struct", "typedef", "export", "auto", "extern",
      "var", "static", "array", "profile", "tuple", "complex"};
  if (kReserved.contains(word)) return true;
  return word.size() > 2 && word.ends_with("__");
}

bool is_surface_keyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kKeywords = {
      "False",  "None",   "True",    "and",      "as",     "assert", "async",
      "await",  "break",  "class",   "continue", "def",    "del",    "elif",
      "else",   "except", "finally", "for",      "from",   "global", "if",
      "import", "in",     "is",      "lambda",   "nonlocal", "not",  "or",
      "pass",   "raise",  "return",  "try",      "while",  "with",   "yield"};
  return kKeywords.contains(word);
}

}  // namespace yaps
