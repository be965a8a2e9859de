#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run yapsc_run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = yapsc::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& rel) { return (yaps::testing::corpus_dir() / rel).string(); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("yapsc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, CompileCoinToStdout) {
  auto r = yapsc_run({"compile", corpus("yaps/coin.py")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, yaps::testing::read_text(corpus("remap/coin.stan")));
  EXPECT_EQ(r.err, "");
}

TEST_F(CliTest, CompileWritesOutputAndMap) {
  auto r = yapsc_run({"compile", corpus("yaps/coin.py"), "-o", tmp("c.stan"), "--map", tmp("c.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(yaps::testing::read_text(tmp("c.stan")), yaps::testing::read_text(corpus("remap/coin.stan")));
  auto map = nlohmann::json::parse(yaps::testing::read_text(tmp("c.json")));
  EXPECT_EQ(map.size(), 5u);
}

TEST_F(CliTest, CompileWithErrorsExitsOne) {
  auto r = yapsc_run({"compile", corpus("yaps/misspelled.py")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("error[E_UNDEF]: undefined variable thetap"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("warning[W_UNUSED]: unused variable theta"), std::string::npos) << r.err;
}

TEST_F(CliTest, JsonDiagnostics) {
  auto r = yapsc_run({"--format", "json", "check", corpus("yaps/misspelled.py")});
  EXPECT_EQ(r.code, 1);
  auto diags = nlohmann::json::parse(r.err);
  ASSERT_EQ(diags.size(), 2u);
  EXPECT_EQ(diags[1]["code"], "E_UNDEF");
  auto after = yapsc_run({"check", corpus("yaps/misspelled.py"), "--format", "json"});
  EXPECT_EQ(after.err, r.err);
}

TEST_F(CliTest, CheckCleanModelIsSilent) {
  auto r = yapsc_run({"check", corpus("yaps/empty.py")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err, "");
}

TEST_F(CliTest, MissingFileIsIoError) {
  auto r = yapsc_run({"compile", tmp("absent.py")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("E_IO"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(yapsc_run({}).code, 2);
  EXPECT_EQ(yapsc_run({"frobnicate"}).code, 2);
  EXPECT_EQ(yapsc_run({"compile"}).code, 2);
  EXPECT_EQ(yapsc_run({"--format", "xml", "check", "x.py"}).code, 2);
  EXPECT_EQ(yapsc_run({"remap"}).code, 2);
}

TEST_F(CliTest, HelpAndVersion) {
  auto help = yapsc_run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("roundtrip"), std::string::npos);
  auto version = yapsc_run({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_EQ(version.out.rfind("yapsc ", 0), 0u);
}

TEST_F(CliTest, Graph) {
  auto r = yapsc_run({"graph", corpus("yaps/coin.py")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "digraph \"coin\" {\n  \"theta\" [shape=circle];\n  \"x\" [shape=doublecircle];\n"
            "  \"theta\" -> \"x\";\n}\n");
}

TEST_F(CliTest, DecompileNamesModelAfterFile) {
  auto r = yapsc_run({"decompile", corpus("stan/eight_schools.stan")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("def eight_schools(J: int(lower=0)"), std::string::npos) << r.out;
  write("2-bad name.stan", "model { }");
  auto odd = yapsc_run({"decompile", tmp("2-bad name.stan")});
  EXPECT_NE(odd.out.find("def m_2_bad_name():"), std::string::npos) << odd.out;
  auto named = yapsc_run({"decompile", corpus("stan/coin.stan"), "--name", "flip"});
  EXPECT_NE(named.out.find("def flip("), std::string::npos);
}

TEST_F(CliTest, DecompileDeprecatedFails) {
  auto r = yapsc_run({"decompile", corpus("deprecated/arrow_assign.stan")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("E_DEPRECATED"), std::string::npos);
}

TEST_F(CliTest, RemapFromFileAndStdin) {
  const std::string stderr_text = "Semantic error in 'coin.stan', line 10, column 21:\nbad\n";
  write("err.txt", stderr_text);
  auto from_file = yapsc_run({"remap", "--map", corpus("remap/coin.map.json"), "--stderr", tmp("err.txt")});
  EXPECT_EQ(from_file.code, 1);
  EXPECT_EQ(from_file.out.rfind("coin.py:8:9: error[E_EXTERNAL]: Semantic error", 0), 0u) << from_file.out;
  EXPECT_NE(from_file.out.find("note: generated Stan line 10, column 21"), std::string::npos);
  auto from_stdin = yapsc_run({"remap", "--map", corpus("remap/coin.map.json")}, stderr_text);
  EXPECT_EQ(from_stdin.out, from_file.out);
  auto renamed = yapsc_run({"remap", "--map", corpus("remap/coin.map.json"), "--yaps-file", "nb.py"},
                           stderr_text);
  EXPECT_EQ(renamed.out.rfind("nb.py:8:9:", 0), 0u);
}

TEST_F(CliTest, RemapWarningsOnlyExitZero) {
  auto r = yapsc_run({"remap", "--map", corpus("remap/coin.map.json")},
                     "Warning in 'coin.stan', line 8, column 2: hmm\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("warning[W_EXTERNAL]"), std::string::npos);
}

TEST_F(CliTest, RemapMalformedMap) {
  write("bad.json", "{not json");
  auto r = yapsc_run({"remap", "--map", tmp("bad.json")}, "");
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, RoundTripCorpus) {
  auto r = yapsc_run({"roundtrip", corpus("stan")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(100%)"), std::string::npos);
  auto mixed = yapsc_run({"roundtrip", corpus("stan"), corpus("deprecated"), "-j", "2"});
  EXPECT_EQ(mixed.code, 1);
  auto json = yapsc_run({"--format", "json", "roundtrip", corpus("deprecated")});
  auto parsed = nlohmann::json::parse(json.out);
  EXPECT_EQ(parsed["failed_by_cause"]["DeprecatedSyntax"], parsed["total"]);
}

TEST_F(CliTest, RoundTripEmptyDirectory) {
  auto r = yapsc_run({"roundtrip", dir_.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("passed 0 of 0 (0%)"), std::string::npos);
  EXPECT_NE(r.err.find("W_EMPTY_CORPUS"), std::string::npos);
}

TEST_F(CliTest, RoundTripMissingPath) {
  EXPECT_EQ(yapsc_run({"roundtrip", tmp("nope")}).code, 3);
}

TEST_F(CliTest, CustomBuiltinsTable) {
  write("builtins.txt", "# nothing but normal\nnormal\n");
  auto r = yapsc_run({"--builtins", tmp("builtins.txt"), "check", corpus("yaps/coin.py")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("unknown distribution uniform"), std::string::npos) << r.err;
  EXPECT_EQ(yapsc_run({"--builtins", tmp("missing.txt"), "check", corpus("yaps/coin.py")}).code, 3);
}

}  // namespace
