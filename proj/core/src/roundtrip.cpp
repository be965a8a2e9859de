#include "yaps/roundtrip.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "yaps/lower.hpp"
#include "yaps/normalize.hpp"
#include "yaps/stan_emitter.hpp"
#include "yaps/stan_parser.hpp"
#include "yaps/yaps_emitter.hpp"
#include "yaps/yaps_parser.hpp"

namespace yaps {

namespace {

constexpr std::size_t kMaxDiffItems = 5;

constexpr Outcome kFailures[] = {Outcome::DeprecatedSyntax, Outcome::Unsupported,
                                 Outcome::SyntaxError, Outcome::Mismatch, Outcome::IOError};

Outcome from_cause(FailureCause cause) {
  switch (cause) {
    case FailureCause::DeprecatedSyntax: return Outcome::DeprecatedSyntax;
    case FailureCause::Unsupported: return Outcome::Unsupported;
    case FailureCause::SyntaxError: return Outcome::SyntaxError;
  }
  return Outcome::SyntaxError;
}

std::string first_error(const Diagnostics& diags) {
  for (const auto& d : diags) {
    if (!d.is_error()) continue;
    std::string where = d.span ? to_string(*d.span) + ": " : "";
    return where + "error[" + d.code + "]: " + d.message;
  }
  return "";
}

FileResult failed(const std::string& path, const std::string& stage, const Diagnostics& diags) {
  return FileResult{path, from_cause(classify_failure(diags)), stage, first_error(diags),
                    std::nullopt};
}

// First line of the Stan rendering of one statement.
std::string stmt_text(const Stmt& s) {
  Program p;
  p.blocks[BlockKind::Model].push_back(s);
  const std::string text = emit_stan(p).text;
  const auto begin = text.find('\n') + 1;
  std::string line = text.substr(begin, text.find('\n', begin) - begin);
  return line.substr(std::min(line.find_first_not_of(' '), line.size()));
}

std::string diff_summary(const Program& expected, const Program& actual) {
  const Program a = normalize(expected);
  const Program b = normalize(actual);
  std::vector<std::string> items;
  auto add = [&](std::string item) {
    if (items.size() < kMaxDiffItems) items.push_back(std::move(item));
  };
  if (a.functions != b.functions) add("functions differ");
  std::set<BlockKind> kinds;
  for (const auto& [k, _] : a.blocks) kinds.insert(k);
  for (const auto& [k, _] : b.blocks) kinds.insert(k);
  for (BlockKind k : kinds) {
    const std::string block(block_stan_name(k));
    const auto* xs = a.block(k);
    const auto* ys = b.block(k);
    if (!xs || !ys) {
      add(block + ": block " + (xs ? "missing after round trip" : "added by round trip"));
      continue;
    }
    const std::size_t n = std::max(xs->size(), ys->size());
    for (std::size_t i = 0; i < n; ++i) {
      const Stmt* x = i < xs->size() ? &(*xs)[i] : nullptr;
      const Stmt* y = i < ys->size() ? &(*ys)[i] : nullptr;
      if (x && y && *x == *y) continue;
      add(block + "[" + std::to_string(i) + "]: expected `" + (x ? stmt_text(*x) : "<none>") +
          "`, got `" + (y ? stmt_text(*y) : "<none>") + "`");
    }
  }
  std::string out;
  for (const auto& item : items) out += (out.empty() ? "" : "\n") + item;
  return out.empty() ? "programs differ" : out;
}

std::vector<std::string> expand(const std::vector<std::filesystem::path>& paths) {
  std::set<std::string> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (std::filesystem::is_directory(p, ec)) {
      for (auto it = std::filesystem::recursive_directory_iterator(p, ec);
           !ec && it != std::filesystem::recursive_directory_iterator(); it.increment(ec)) {
        if (it->is_regular_file(ec) && it->path().extension() == ".stan") {
          files.insert(it->path().generic_string());
        }
      }
    } else {
      files.insert(p.generic_string());
    }
  }
  return {files.begin(), files.end()};
}

}  // namespace

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "Pass";
    case Outcome::DeprecatedSyntax: return "DeprecatedSyntax";
    case Outcome::Unsupported: return "Unsupported";
    case Outcome::SyntaxError: return "SyntaxError";
    case Outcome::Mismatch: return "Mismatch";
    case Outcome::IOError: return "IOError";
  }
  return "";
}

FileResult roundtrip_source(std::string_view source, const std::string& path) {
  StanParseResult original = parse_stan(source, path);
  if (!original.program) return failed(path, "stan-parse", original.diagnostics);

  YapsEmitResult surface = emit_yaps(*original.program);
  if (has_errors(surface.diagnostics)) {
    FileResult r = failed(path, "yaps-emit", surface.diagnostics);
    r.outcome = Outcome::Unsupported;
    return r;
  }

  YapsParseResult reparsed = parse_yaps_source(surface.text, path + ".py");
  if (!reparsed.model) return failed(path, "yaps-parse", reparsed.diagnostics);
  LowerResult lowered = lower(*reparsed.model);
  if (has_errors(lowered.diagnostics)) return failed(path, "lower", lowered.diagnostics);
  const auto* program = std::get_if<Program>(&lowered.output);
  if (!program) {
    return FileResult{path, Outcome::Mismatch, "lower", "model lowered without blocks",
                      std::nullopt};
  }
  if (!ast_equal(*original.program, *program)) {
    return FileResult{path, Outcome::Mismatch, "compare", "normalized programs differ",
                      diff_summary(*original.program, *program)};
  }
  return FileResult{path, Outcome::Pass, "", "", std::nullopt};
}

FileResult roundtrip_file(const std::filesystem::path& path) {
  const std::string name = path.generic_string();
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path)) {
    return FileResult{name, Outcome::IOError, "read", "cannot read " + name, std::nullopt};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return roundtrip_source(buffer.str(), name);
}

RoundTripReport run_corpus(const std::vector<std::filesystem::path>& paths, unsigned threads) {
  const std::vector<std::string> files = expand(paths);
  RoundTripReport report;
  for (Outcome o : kFailures) report.failed_by_cause[std::string(outcome_name(o))] = 0;
  report.per_file.resize(files.size());

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, files.size()));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
          report.per_file[i] = roundtrip_file(files[i]);
        }
      });
    }
  }

  report.total = static_cast<int>(files.size());
  for (const auto& r : report.per_file) {
    if (r.outcome == Outcome::Pass) {
      ++report.passed;
    } else {
      ++report.failed_by_cause[std::string(outcome_name(r.outcome))];
    }
  }
  if (files.empty()) {
    report.diagnostics.push_back(
        Diagnostic::warning(codes::kEmptyCorpus, "no .stan files found in the given paths"));
  }
  return report;
}

std::string pass_percentage(int passed, int total) {
  if (total == 0) return "0";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << 100.0 * passed / total;
  std::string text = out.str();
  if (text.ends_with(".0")) text.resize(text.size() - 2);
  return text;
}

std::string report_text(const RoundTripReport& report) {
  std::string out;
  for (const auto& r : report.per_file) {
    if (r.outcome == Outcome::Pass) {
      out += "PASS " + r.path + "\n";
      continue;
    }
    out += "FAIL " + r.path + " [" + std::string(outcome_name(r.outcome)) + "] " + r.stage + ": " +
           r.message + "\n";
    if (r.diff) {
      std::istringstream lines(*r.diff);
      std::string line;
      while (std::getline(lines, line)) out += "    " + line + "\n";
    }
  }
  out += "passed " + std::to_string(report.passed) + " of " + std::to_string(report.total) + " (" +
         pass_percentage(report.passed, report.total) + "%)\n";
  return out;
}

std::string report_json(const RoundTripReport& report) {
  nlohmann::ordered_json doc;
  doc["total"] = report.total;
  doc["passed"] = report.passed;
  doc["failed_by_cause"] = nlohmann::ordered_json::object();
  for (Outcome o : kFailures) {
    const std::string key(outcome_name(o));
    doc["failed_by_cause"][key] = report.failed_by_cause.count(key) ? report.failed_by_cause.at(key) : 0;
  }
  doc["per_file"] = nlohmann::ordered_json::array();
  for (const auto& r : report.per_file) {
    nlohmann::ordered_json entry;
    entry["path"] = r.path;
    entry["outcome"] = outcome_name(r.outcome);
    if (!r.stage.empty()) entry["stage"] = r.stage;
    if (!r.message.empty()) entry["message"] = r.message;
    entry["diff"] = r.diff ? nlohmann::ordered_json(*r.diff) : nlohmann::ordered_json(nullptr);
    doc["per_file"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace yaps
