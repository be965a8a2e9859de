#include "helpers.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "yaps/block_inference.hpp"
#include "yaps/lower.hpp"
#include "yaps/normalize.hpp"
#include "yaps/stan_emitter.hpp"
#include "yaps/stan_parser.hpp"
#include "yaps/yaps_parser.hpp"

namespace yaps::testing {

std::filesystem::path corpus_dir() { return YAPS_CORPUS_DIR; }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FrontendResult yaps_frontend(std::string_view source, std::string_view file) {
  FrontendResult out;
  auto parsed = parse_yaps_source(source, file);
  out.diagnostics = parsed.diagnostics;
  if (!parsed.model || has_errors(out.diagnostics)) return out;
  auto lowered = lower(*parsed.model);
  out.diagnostics.insert(out.diagnostics.end(), lowered.diagnostics.begin(),
                         lowered.diagnostics.end());
  if (has_errors(out.diagnostics)) return out;
  if (auto* program = std::get_if<Program>(&lowered.output)) {
    out.program = std::move(*program);
    return out;
  }
  auto inferred = infer_blocks(std::get<UnplacedModel>(lowered.output));
  out.diagnostics.insert(out.diagnostics.end(), inferred.diagnostics.begin(),
                         inferred.diagnostics.end());
  if (!has_errors(out.diagnostics)) out.program = std::move(inferred.program);
  return out;
}

Program stan_program(std::string_view source) {
  auto parsed = parse_stan(source);
  if (!parsed.program) {
    std::fprintf(stderr, "stan_program: %s\n", render(parsed.diagnostics, RenderFormat::Text).c_str());
    std::abort();
  }
  return std::move(*parsed.program);
}

std::string span_summary(const Diagnostics& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += std::string(severity_name(d.severity)) + " " + d.code + " ";
    if (d.span) {
      const auto& s = *d.span;
      out += s.file + ":" + std::to_string(s.start_line) + ":" + std::to_string(s.start_col) + "-" +
             std::to_string(s.end_line) + ":" + std::to_string(s.end_col);
    } else {
      out += "-";
    }
    out += "\n";
  }
  return out;
}

std::vector<RemapFixture> remap_fixtures() {
  std::vector<RemapFixture> out;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir() / "remap")) {
    if (!entry.is_directory()) continue;
    RemapFixture f;
    f.name = entry.path().filename().string();
    f.stderr_text = read_text(entry.path() / "stderr.txt");
    f.expected = read_text(entry.path() / "expected.txt");
    if (std::filesystem::exists(entry.path() / "yaps_file.txt")) {
      f.yaps_file = read_text(entry.path() / "yaps_file.txt");
      while (!f.yaps_file.empty() && std::isspace(static_cast<unsigned char>(f.yaps_file.back()))) {
        f.yaps_file.pop_back();
      }
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const RemapFixture& a, const RemapFixture& b) { return a.name < b.name; });
  return out;
}

std::string describe(const Program& program) { return emit_stan(normalize(program)).text; }

}  // namespace yaps::testing
