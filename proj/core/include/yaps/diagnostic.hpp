#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "yaps/source_span.hpp"

namespace yaps {

enum class Severity { Error, Warning };

/// Registered diagnostic codes. Every Diagnostic's code is one of these.
namespace codes {
inline constexpr std::string_view kSyntax = "E_SYNTAX";
inline constexpr std::string_view kIndent = "E_INDENT";
inline constexpr std::string_view kIllegalChar = "E_CHAR";
inline constexpr std::string_view kDeprecated = "E_DEPRECATED";
inline constexpr std::string_view kUnsupported = "E_UNSUPPORTED";
inline constexpr std::string_view kUndefined = "E_UNDEF";
inline constexpr std::string_view kReserved = "E_RESERVED";
inline constexpr std::string_view kKeyword = "E_KEYWORD";
inline constexpr std::string_view kKeywordClash = "E_KEYWORD_CLASH";
inline constexpr std::string_view kMixedBlocks = "E_MIXED_BLOCKS";
inline constexpr std::string_view kReturnOutsideFunction = "E_RETURN";
inline constexpr std::string_view kNoModel = "E_NO_MODEL";
inline constexpr std::string_view kConflictingRoles = "E_CONFLICT";
inline constexpr std::string_view kAmbiguousBlock = "E_AMBIGUOUS_BLOCK";
inline constexpr std::string_view kGenQuantInModel = "E_GQ_IN_MODEL";
inline constexpr std::string_view kExternal = "E_EXTERNAL";
inline constexpr std::string_view kIo = "E_IO";
inline constexpr std::string_view kInternal = "E_INTERNAL";
inline constexpr std::string_view kUnused = "W_UNUSED";
inline constexpr std::string_view kUnknownFunction = "W_UNKNOWN_FN";
inline constexpr std::string_view kExternalWarning = "W_EXTERNAL";
inline constexpr std::string_view kEmptyCorpus = "W_EMPTY_CORPUS";

bool is_registered(std::string_view code);
}  // namespace codes

struct DiagnosticNote {
  std::string text;
  std::optional<SourceSpan> span;
  friend bool operator==(const DiagnosticNote&, const DiagnosticNote&) = default;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::optional<SourceSpan> span;
  std::vector<DiagnosticNote> notes;

  static Diagnostic error(std::string_view code, std::string message,
                          std::optional<SourceSpan> span = std::nullopt);
  static Diagnostic warning(std::string_view code, std::string message,
                            std::optional<SourceSpan> span = std::nullopt);

  Diagnostic& note(std::string text, std::optional<SourceSpan> span = std::nullopt) {
    notes.push_back({std::move(text), std::move(span)});
    return *this;
  }

  bool is_error() const { return severity == Severity::Error; }

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

bool has_errors(std::span<const Diagnostic> diags);
std::string_view severity_name(Severity severity);

/// Stable ordering: by span (span-less diagnostics last), then by code.
void sort_diagnostics(Diagnostics& diags);

enum class RenderFormat { Text, Json };

/// Text: `file:line:col: severity[code]: message`, one per line, notes
/// indented below. Json: an array of objects with the fields severity,
/// code, message, file, line, col, end_line, end_col, notes.
std::string render(Diagnostics diags, RenderFormat format);

/// Inverse of render(..., Json). Throws std::runtime_error on malformed input.
Diagnostics parse_diagnostics_json(std::string_view text);

}  // namespace yaps
