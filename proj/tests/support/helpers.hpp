#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yaps/diagnostic.hpp"
#include "yaps/ir.hpp"

namespace yaps::testing {

std::filesystem::path corpus_dir();
std::string read_text(const std::filesystem::path& path);

struct FrontendResult {
  std::optional<Program> program;
  Diagnostics diagnostics;
};

/// Surface text to IR without scope checking: parse then lower. Blockless
/// models go through block inference.
FrontendResult yaps_frontend(std::string_view source, std::string_view file = "<input>");

/// Program parsed from Stan text; aborts the test binary on failure.
Program stan_program(std::string_view source);

/// One line per diagnostic: `severity code file:line:col-end_line:end_col`,
/// or `severity code -` when there is no span.
std::string span_summary(const Diagnostics& diags);

struct RemapFixture {
  std::string name;
  std::string stderr_text;
  std::string yaps_file;  // empty: keep the map's file
  std::string expected;   // span_summary of the expected result
};

/// Stderr fixtures under corpus/remap, sorted by name.
std::vector<RemapFixture> remap_fixtures();

/// Printable form of a program for failure messages.
std::string describe(const Program& program);

}  // namespace yaps::testing
