#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "yaps/builtins.hpp"
#include "yaps/diagnostic.hpp"
#include "yaps/graph.hpp"
#include "yaps/pipeline.hpp"
#include "yaps/remap.hpp"
#include "yaps/roundtrip.hpp"
#include "yaps/source_map.hpp"
#include "yaps/stan_emitter.hpp"
#include "yaps/stan_parser.hpp"
#include "yaps/yaps_emitter.hpp"

#ifndef YAPS_VERSION
#define YAPS_VERSION "0.0.0"
#endif

namespace yapsc {
namespace {

namespace fs = std::filesystem;

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError{"cannot read " + path};
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError{"cannot write " + path};
  out << text;
  out.close();
  if (!out) throw IoError{"cannot write " + path};
}

/// Writes to `path`, or to `out` when path is empty or "-".
void deliver(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

struct Globals {
  std::string format = "text";
  std::string builtins_path;
  yaps::RenderFormat render_format() const {
    return format == "json" ? yaps::RenderFormat::Json : yaps::RenderFormat::Text;
  }
};

void report(const yaps::Diagnostics& diags, const Globals& globals, std::ostream& err) {
  if (globals.render_format() == yaps::RenderFormat::Json) {
    err << yaps::render(diags, yaps::RenderFormat::Json);
    return;
  }
  if (!diags.empty()) err << yaps::render(diags, yaps::RenderFormat::Text);
}

int exit_for(const yaps::Diagnostics& diags) {
  return yaps::has_errors(diags) ? kExitErrors : kExitOk;
}

int io_failure(const IoError& e, const Globals& globals, std::ostream& err) {
  report({yaps::Diagnostic::error(yaps::codes::kIo, e.message)}, globals, err);
  return kExitIo;
}

/// File stem turned into a usable model function name.
std::string model_name_from_path(const std::string& path) {
  std::string stem = fs::path(path).stem().string();
  std::string name;
  for (char c : stem) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    name.push_back(ok ? c : '_');
  }
  if (name.empty() || std::all_of(name.begin(), name.end(), [](char c) { return c == '_'; }))
    return "model";
  if (std::isdigit(static_cast<unsigned char>(name.front()))) name = "m_" + name;
  if (yaps::is_surface_keyword(name) || yaps::is_stan_reserved(name)) name += "_model";
  return name;
}

struct CompileArgs {
  std::string input;
  std::string output;
  std::string map_path;
  std::string model;
};

int cmd_compile(const CompileArgs& args, const Globals& globals, const yaps::Builtins* builtins,
                std::ostream& out, std::ostream& err) {
  try {
    std::string source = read_file(args.input);
    yaps::CompileOptions options;
    if (!args.model.empty()) options.model_name = args.model;
    options.builtins = builtins;
    auto result = yaps::compile_yaps(source, args.input, options);
    report(result.diagnostics, globals, err);
    if (!result.program) return exit_for(result.diagnostics);
    auto emitted = yaps::emit_stan(*result.program);
    deliver(args.output, emitted.text, out);
    if (!args.map_path.empty()) write_file(args.map_path, yaps::source_map_to_json(emitted.map));
    return exit_for(result.diagnostics);
  } catch (const IoError& e) {
    return io_failure(e, globals, err);
  }
}

int cmd_check(const CompileArgs& args, const Globals& globals, const yaps::Builtins* builtins,
              std::ostream& err) {
  try {
    std::string source = read_file(args.input);
    yaps::CompileOptions options;
    if (!args.model.empty()) options.model_name = args.model;
    options.builtins = builtins;
    auto result = yaps::compile_yaps(source, args.input, options);
    report(result.diagnostics, globals, err);
    return exit_for(result.diagnostics);
  } catch (const IoError& e) {
    return io_failure(e, globals, err);
  }
}

int cmd_graph(const CompileArgs& args, const Globals& globals, const yaps::Builtins* builtins,
              std::ostream& out, std::ostream& err) {
  try {
    std::string source = read_file(args.input);
    yaps::CompileOptions options;
    if (!args.model.empty()) options.model_name = args.model;
    options.builtins = builtins;
    auto result = yaps::compile_yaps(source, args.input, options);
    report(result.diagnostics, globals, err);
    if (!result.program) return exit_for(result.diagnostics);
    std::string name = result.model_name.empty() ? "model" : result.model_name;
    deliver(args.output, yaps::to_dot(*result.program, name), out);
    return exit_for(result.diagnostics);
  } catch (const IoError& e) {
    return io_failure(e, globals, err);
  }
}

int cmd_decompile(const CompileArgs& args, const Globals& globals, std::ostream& out,
                  std::ostream& err) {
  try {
    std::string source = read_file(args.input);
    auto parsed = yaps::parse_stan(source, args.input);
    yaps::Diagnostics diags = parsed.diagnostics;
    if (!parsed.program) {
      report(diags, globals, err);
      return exit_for(diags);
    }
    std::string name = args.model.empty() ? model_name_from_path(args.input) : args.model;
    auto emitted = yaps::emit_yaps(*parsed.program, name);
    diags.insert(diags.end(), emitted.diagnostics.begin(), emitted.diagnostics.end());
    yaps::sort_diagnostics(diags);
    report(diags, globals, err);
    if (yaps::has_errors(diags)) return kExitErrors;
    deliver(args.output, emitted.text, out);
    return kExitOk;
  } catch (const IoError& e) {
    return io_failure(e, globals, err);
  }
}

struct RemapArgs {
  std::string map_path;
  std::string stderr_path;
  std::string yaps_file;
  std::string patterns_path;
};

int cmd_remap(const RemapArgs& args, const Globals& globals, std::istream& in, std::ostream& out,
              std::ostream& err) {
  try {
    std::string map_text = read_file(args.map_path);
    yaps::SourceMap map;
    try {
      map = yaps::source_map_from_json(map_text);
    } catch (const std::runtime_error& e) {
      report({yaps::Diagnostic::error(yaps::codes::kIo,
                                      "malformed source map " + args.map_path + ": " + e.what())},
             globals, err);
      return kExitIo;
    }
    std::string text;
    if (args.stderr_path.empty() || args.stderr_path == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      text = read_file(args.stderr_path);
    }
    std::optional<yaps::LocationPatterns> custom;
    if (!args.patterns_path.empty()) {
      try {
        custom = yaps::LocationPatterns::parse(read_file(args.patterns_path));
      } catch (const std::runtime_error& e) {
        report({yaps::Diagnostic::error(yaps::codes::kIo, e.what())}, globals, err);
        return kExitIo;
      }
    }
    auto diags = yaps::remap_external(text, map, args.yaps_file,
                                      custom ? *custom : yaps::LocationPatterns::standard());
    out << yaps::render(diags, globals.render_format());
    return exit_for(diags);
  } catch (const IoError& e) {
    return io_failure(e, globals, err);
  }
}

struct RoundTripArgs {
  std::vector<std::string> paths;
  unsigned jobs = 0;
};

int cmd_roundtrip(const RoundTripArgs& args, const Globals& globals, std::ostream& out,
                  std::ostream& err) {
  std::vector<fs::path> paths;
  for (const auto& p : args.paths) {
    std::error_code ec;
    if (!fs::exists(p, ec)) {
      report({yaps::Diagnostic::error(yaps::codes::kIo, "no such file or directory " + p)}, globals,
             err);
      return kExitIo;
    }
    paths.emplace_back(p);
  }
  auto rep = yaps::run_corpus(paths, args.jobs);
  if (!rep.diagnostics.empty()) report(rep.diagnostics, globals, err);
  out << (globals.render_format() == yaps::RenderFormat::Json ? yaps::report_json(rep)
                                                              : yaps::report_text(rep));
  return rep.passed == rep.total ? kExitOk : kExitErrors;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Translate between Python-syntax probabilistic models and Stan", "yapsc"};
  app.set_version_flag("--version", std::string("yapsc ") + YAPS_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Diagnostic and report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--builtins", globals.builtins_path, "Override the builtin function table");

  CompileArgs compile_args;
  auto* compile = app.add_subcommand("compile", "Compile a surface model to Stan");
  compile->add_option("input", compile_args.input, "Surface source file")->required();
  compile->add_option("-o,--output", compile_args.output, "Stan output file (default stdout)");
  compile->add_option("--map", compile_args.map_path, "Write the source map as JSON");
  compile->add_option("--model", compile_args.model, "Name of the model function to compile");

  CompileArgs check_args;
  auto* check = app.add_subcommand("check", "Check a surface model without emitting");
  check->add_option("input", check_args.input, "Surface source file")->required();
  check->add_option("--model", check_args.model, "Name of the model function to check");

  CompileArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Export the graphical model as DOT");
  graph->add_option("input", graph_args.input, "Surface source file")->required();
  graph->add_option("-o,--output", graph_args.output, "DOT output file (default stdout)");
  graph->add_option("--model", graph_args.model, "Name of the model function");

  CompileArgs decompile_args;
  auto* decompile = app.add_subcommand("decompile", "Translate Stan to a surface model");
  decompile->add_option("input", decompile_args.input, "Stan source file")->required();
  decompile->add_option("-o,--output", decompile_args.output,
                        "Surface output file (default stdout)");
  decompile->add_option("--name", decompile_args.model,
                        "Model function name (default: input file stem)");

  RemapArgs remap_args;
  auto* remap = app.add_subcommand("remap", "Map Stan compiler messages back to the source");
  remap->add_option("--map", remap_args.map_path, "Source map written by compile")->required();
  remap->add_option("--stderr", remap_args.stderr_path,
                    "Captured compiler output (default stdin)");
  remap->add_option("--yaps-file", remap_args.yaps_file,
                    "Surface file name to report instead of the one in the map");
  remap->add_option("--patterns", remap_args.patterns_path,
                    "Override the location pattern table");

  RoundTripArgs rt_args;
  auto* roundtrip = app.add_subcommand("roundtrip", "Round-trip a corpus of Stan programs");
  roundtrip->add_option("paths", rt_args.paths, "Stan files or directories")->required();
  roundtrip->add_option("-j,--jobs", rt_args.jobs, "Worker threads (default: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::optional<yaps::Builtins> custom_builtins;
  if (!globals.builtins_path.empty()) {
    try {
      custom_builtins = yaps::Builtins::load(globals.builtins_path);
    } catch (const std::exception& e) {
      report({yaps::Diagnostic::error(yaps::codes::kIo, e.what())}, globals, err);
      return kExitIo;
    }
  }
  const yaps::Builtins* builtins = custom_builtins ? &*custom_builtins : nullptr;

  try {
    if (compile->parsed()) return cmd_compile(compile_args, globals, builtins, out, err);
    if (check->parsed()) return cmd_check(check_args, globals, builtins, err);
    if (graph->parsed()) return cmd_graph(graph_args, globals, builtins, out, err);
    if (decompile->parsed()) return cmd_decompile(decompile_args, globals, out, err);
    if (remap->parsed()) return cmd_remap(remap_args, globals, in, out, err);
    if (roundtrip->parsed()) return cmd_roundtrip(rt_args, globals, out, err);
  } catch (const std::exception& e) {
    report({yaps::Diagnostic::error(yaps::codes::kInternal, e.what())}, globals, err);
    return kExitErrors;
  }
  return kExitUsage;
}

}  // namespace yapsc
