#include "yaps/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace yaps {

namespace codes {
bool is_registered(std::string_view code) {
  static constexpr std::array kAll = {
      kSyntax,           kIndent,        kIllegalChar,  kDeprecated,
      kUnsupported,      kUndefined,     kReserved,     kKeyword,
      kKeywordClash,     kMixedBlocks,   kReturnOutsideFunction,
      kNoModel,          kConflictingRoles, kAmbiguousBlock, kGenQuantInModel,
      kExternal,         kIo,            kInternal,     kUnused,
      kUnknownFunction,  kExternalWarning, kEmptyCorpus};
  return std::find(kAll.begin(), kAll.end(), code) != kAll.end();
}
}  // namespace codes

Diagnostic Diagnostic::error(std::string_view code, std::string message,
                             std::optional<SourceSpan> span) {
  return Diagnostic{Severity::Error, std::string(code), std::move(message), std::move(span), {}};
}

Diagnostic Diagnostic::warning(std::string_view code, std::string message,
                               std::optional<SourceSpan> span) {
  return Diagnostic{Severity::Warning, std::string(code), std::move(message), std::move(span),
                    {}};
}

bool has_errors(std::span<const Diagnostic> diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); });
}

std::string_view severity_name(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

void sort_diagnostics(Diagnostics& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.span.has_value() != b.span.has_value()) return a.span.has_value();
    if (a.span && *a.span != *b.span) return *a.span < *b.span;
    return a.code < b.code;
  });
}

namespace {

using Json = nlohmann::ordered_json;

void put_span(Json& obj, const std::optional<SourceSpan>& span) {
  if (span) {
    obj["file"] = span->file;
    obj["line"] = span->start_line;
    obj["col"] = span->start_col;
    obj["end_line"] = span->end_line;
    obj["end_col"] = span->end_col;
  } else {
    obj["file"] = nullptr;
    obj["line"] = nullptr;
    obj["col"] = nullptr;
    obj["end_line"] = nullptr;
    obj["end_col"] = nullptr;
  }
}

std::optional<SourceSpan> get_span(const Json& obj) {
  if (!obj.contains("line") || obj.at("line").is_null()) return std::nullopt;
  SourceSpan span;
  span.file = obj.value("file", std::string{});
  span.start_line = obj.at("line").get<int>();
  span.start_col = obj.at("col").get<int>();
  span.end_line = obj.contains("end_line") && !obj.at("end_line").is_null()
                      ? obj.at("end_line").get<int>()
                      : span.start_line;
  span.end_col = obj.contains("end_col") && !obj.at("end_col").is_null()
                     ? obj.at("end_col").get<int>()
                     : span.start_col;
  return span;
}

std::string location_prefix(const std::optional<SourceSpan>& span) {
  if (!span) return "";
  return to_string(*span) + ": ";
}

}  // namespace

std::string render(Diagnostics diags, RenderFormat format) {
  sort_diagnostics(diags);
  if (format == RenderFormat::Json) {
    Json out = Json::array();
    for (const auto& d : diags) {
      Json obj;
      obj["severity"] = severity_name(d.severity);
      obj["code"] = d.code;
      obj["message"] = d.message;
      put_span(obj, d.span);
      Json notes = Json::array();
      for (const auto& n : d.notes) {
        Json note;
        note["message"] = n.text;
        put_span(note, n.span);
        notes.push_back(std::move(note));
      }
      obj["notes"] = std::move(notes);
      out.push_back(std::move(obj));
    }
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  for (const auto& d : diags) {
    os << location_prefix(d.span) << severity_name(d.severity) << '[' << d.code
       << "]: " << d.message << '\n';
    for (const auto& n : d.notes) {
      os << "  " << location_prefix(n.span) << "note: " << n.text << '\n';
    }
  }
  return os.str();
}

Diagnostics parse_diagnostics_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed diagnostics JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::runtime_error("diagnostics JSON must be an array");
  Diagnostics out;
  for (const auto& obj : doc) {
    Diagnostic d;
    const auto severity = obj.at("severity").get<std::string>();
    if (severity == "error") {
      d.severity = Severity::Error;
    } else if (severity == "warning") {
      d.severity = Severity::Warning;
    } else {
      throw std::runtime_error("unknown severity '" + severity + "'");
    }
    d.code = obj.at("code").get<std::string>();
    d.message = obj.at("message").get<std::string>();
    d.span = get_span(obj);
    for (const auto& n : obj.value("notes", Json::array())) {
      d.notes.push_back({n.at("message").get<std::string>(), get_span(n)});
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace yaps
