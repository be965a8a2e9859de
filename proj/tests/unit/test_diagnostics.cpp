#include <gtest/gtest.h>

#include <json.hpp>

#include "yaps/diagnostic.hpp"

namespace yaps {
namespace {

SourceSpan at(int line, int col, int end_col) { return SourceSpan{"model.py", line, col, line, end_col}; }

TEST(Diagnostics, TextFormat) {
  Diagnostics d = {Diagnostic::error(codes::kUndefined, "undefined variable thetap", at(4, 11, 17))};
  EXPECT_EQ(render(d, RenderFormat::Text),
            "model.py:4:11: error[E_UNDEF]: undefined variable thetap\n");
}

TEST(Diagnostics, EmptyTextIsEmpty) { EXPECT_EQ(render({}, RenderFormat::Text), ""); }

TEST(Diagnostics, NotesAreIndented) {
  Diagnostic d = Diagnostic::warning(codes::kExternalWarning, "careful", at(2, 1, 3));
  d.note("generated Stan line 7, column 10");
  d.note("see here", at(3, 5, 6));
  EXPECT_EQ(render({d}, RenderFormat::Text),
            "model.py:2:1: warning[W_EXTERNAL]: careful\n"
            "  note: generated Stan line 7, column 10\n"
            "  model.py:3:5: note: see here\n");
}

TEST(Diagnostics, SpanlessDiagnostic) {
  EXPECT_EQ(render({Diagnostic::error(codes::kIo, "cannot read x")}, RenderFormat::Text),
            "error[E_IO]: cannot read x\n");
}

TEST(Diagnostics, SortedBySpanThenCode) {
  Diagnostics d = {
      Diagnostic::error(codes::kExternal, "no span"),
      Diagnostic::error(codes::kUndefined, "b", at(5, 1, 2)),
      Diagnostic::warning(codes::kUnused, "c", at(2, 9, 10)),
      Diagnostic::error(codes::kSyntax, "d", at(2, 9, 10)),
  };
  sort_diagnostics(d);
  EXPECT_EQ(d[0].code, "E_SYNTAX");
  EXPECT_EQ(d[1].code, "W_UNUSED");
  EXPECT_EQ(d[2].code, "E_UNDEF");
  EXPECT_EQ(d[3].code, "E_EXTERNAL");
  auto text = render({d[3], d[2], d[1], d[0]}, RenderFormat::Text);
  EXPECT_EQ(text.find("model.py:2:9: error"), 0u);
}

TEST(Diagnostics, JsonRoundTrip) {
  Diagnostic a = Diagnostic::error(codes::kConflictingRoles, "conflict", at(3, 2, 8));
  a.note("assigned here", at(4, 5, 9));
  a.note("plain");
  Diagnostics d = {a, Diagnostic::warning(codes::kEmptyCorpus, "none found")};
  auto json = render(d, RenderFormat::Json);
  EXPECT_EQ(parse_diagnostics_json(json), d);
  auto parsed = nlohmann::json::parse(json);
  ASSERT_TRUE(parsed.is_array());
  EXPECT_EQ(parsed[0]["severity"], "error");
  EXPECT_EQ(parsed[0]["line"], 3);
  EXPECT_EQ(parsed[0]["col"], 2);
  EXPECT_TRUE(parsed[1]["file"].is_null());
}

TEST(Diagnostics, JsonOfEmptyListIsEmptyArray) {
  EXPECT_EQ(nlohmann::json::parse(render({}, RenderFormat::Json)), nlohmann::json::array());
}

TEST(Diagnostics, MalformedJsonThrows) {
  EXPECT_THROW(parse_diagnostics_json("[{]"), std::runtime_error);
  EXPECT_THROW(parse_diagnostics_json("{}"), std::runtime_error);
}

TEST(Diagnostics, CodeRegistry) {
  for (auto code : {codes::kSyntax, codes::kUndefined, codes::kUnused, codes::kEmptyCorpus}) {
    EXPECT_TRUE(codes::is_registered(code));
  }
  EXPECT_FALSE(codes::is_registered("E_MADE_UP"));
  EXPECT_TRUE(has_errors(Diagnostics{Diagnostic::error(codes::kIo, "x")}));
  EXPECT_FALSE(has_errors(Diagnostics{Diagnostic::warning(codes::kUnused, "x")}));
}

}  // namespace
}  // namespace yaps
