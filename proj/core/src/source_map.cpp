#include "yaps/source_map.hpp"

#include <stdexcept>

#include <json.hpp>

namespace yaps {

std::string source_map_to_json(const SourceMap& map) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : map.entries) {
    nlohmann::ordered_json entry;
    entry["target"] = {{"line", e.target_line},
                       {"col_start", e.target_col_start},
                       {"col_end", e.target_col_end}};
    entry["source"] = {{"file", e.source.file},
                       {"line", e.source.start_line},
                       {"col_start", e.source.start_col},
                       {"col_end", e.source.end_col},
                       {"end_line", e.source.end_line}};
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

SourceMap source_map_from_json(std::string_view text) {
  SourceMap map;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::runtime_error("source map must be a JSON array");
    for (const auto& entry : doc) {
      const auto& target = entry.at("target");
      const auto& source = entry.at("source");
      SourceMapEntry e;
      e.target_line = target.at("line").get<int>();
      e.target_col_start = target.at("col_start").get<int>();
      e.target_col_end = target.at("col_end").get<int>();
      e.source.file = source.at("file").get<std::string>();
      e.source.start_line = source.at("line").get<int>();
      e.source.start_col = source.at("col_start").get<int>();
      e.source.end_col = source.at("col_end").get<int>();
      e.source.end_line = source.value("end_line", e.source.start_line);
      map.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed source map: ") + e.what());
  }
  return map;
}

}  // namespace yaps
