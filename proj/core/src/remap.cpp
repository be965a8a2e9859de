#include "yaps/remap.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace yaps {

namespace detail {
extern const std::string_view kLocationPatternsText;
}  // namespace detail

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> paragraphs(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string line;
  auto flush = [&] {
    std::string p = trim(current);
    if (!p.empty()) out.push_back(std::move(p));
    current.clear();
  };
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      flush();
    } else {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      current += line + "\n";
    }
  }
  flush();
  return out;
}

struct Location {
  int line;
  std::optional<int> col;
};

std::optional<Location> locate(const std::string& text, const LocationPatterns& patterns) {
  for (const auto& p : patterns.patterns()) {
    std::smatch m;
    if (!std::regex_search(text, m, p.regex) || m.size() < 2 || !m[1].matched) continue;
    Location loc{std::stoi(m[1].str()), std::nullopt};
    if (m.size() > 2 && m[2].matched) loc.col = std::stoi(m[2].str());
    return loc;
  }
  return std::nullopt;
}

// Smallest entry on the line that contains the column. Columns may be
// reported 0- or 1-based, so both readings are accepted.
const SourceMapEntry* find_entry(const SourceMap& map, const Location& loc) {
  const SourceMapEntry* best = nullptr;
  for (const auto& e : map.entries) {
    if (e.target_line != loc.line) continue;
    if (loc.col && (*loc.col < e.target_col_start - 1 || *loc.col > e.target_col_end)) continue;
    if (!best || e.target_col_end - e.target_col_start < best->target_col_end - best->target_col_start) {
      best = &e;
    }
  }
  return best;
}

}  // namespace

LocationPatterns LocationPatterns::parse(std::string_view text) {
  LocationPatterns table;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line).front() == '#') continue;
    try {
      table.patterns_.push_back({line, std::regex(line, std::regex::ECMAScript | std::regex::icase)});
    } catch (const std::regex_error& e) {
      throw std::runtime_error("invalid location pattern '" + line + "': " + e.what());
    }
  }
  return table;
}

LocationPatterns LocationPatterns::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read location patterns: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const LocationPatterns& LocationPatterns::standard() {
  static const LocationPatterns table = parse(detail::kLocationPatternsText);
  return table;
}

Diagnostics remap_external(std::string_view stderr_text, const SourceMap& map,
                           const std::string& yaps_file, const LocationPatterns& patterns) {
  struct Message {
    std::string text;
    std::optional<Location> loc;
  };
  std::vector<Message> messages;
  std::string preamble;
  for (auto& p : paragraphs(stderr_text)) {
    auto loc = locate(p, patterns);
    if (loc) {
      messages.push_back({std::move(p), loc});
    } else if (!messages.empty()) {
      messages.back().text += "\n\n" + p;
    } else {
      preamble += (preamble.empty() ? "" : "\n\n") + p;
    }
  }

  Diagnostics out;
  if (!preamble.empty()) {
    const bool warning = preamble.starts_with("Warning");
    out.push_back(warning ? Diagnostic::warning(codes::kExternalWarning, preamble)
                          : Diagnostic::error(codes::kExternal, preamble));
  }
  for (auto& m : messages) {
    const bool warning = m.text.starts_with("Warning");
    std::string where = "generated Stan line " + std::to_string(m.loc->line);
    if (m.loc->col) where += ", column " + std::to_string(*m.loc->col);
    std::optional<SourceSpan> span;
    if (const SourceMapEntry* e = find_entry(map, *m.loc)) {
      span = e->source;
      if (!yaps_file.empty()) span->file = yaps_file;
    }
    Diagnostic d = warning ? Diagnostic::warning(codes::kExternalWarning, std::move(m.text), span)
                           : Diagnostic::error(codes::kExternal, std::move(m.text), span);
    d.note(where);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace yaps
