#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yaps/pipeline.hpp"
#include "yaps/source_map.hpp"
#include "yaps/stan_emitter.hpp"

namespace yaps {
namespace {

TEST(SourceMap, JsonRoundTrip) {
  SourceMap map;
  map.entries.push_back({3, 3, 20, SourceSpan{"model.py", 4, 5, 4, 30}});
  map.entries.push_back({7, 5, 9, SourceSpan{"dir/x \"q\".py", 10, 1, 12, 2}});
  auto json = source_map_to_json(map);
  EXPECT_EQ(source_map_from_json(json), map);
}

TEST(SourceMap, FrozenCoinMapMatches) {
  auto compiled = compile_yaps(testing::read_text(testing::corpus_dir() / "yaps" / "coin.py"), "coin.py");
  auto json = source_map_to_json(emit_stan(*compiled.program).map);
  EXPECT_EQ(json, testing::read_text(testing::corpus_dir() / "remap" / "coin.map.json"));
}

TEST(SourceMap, MalformedInputThrows) {
  EXPECT_THROW(source_map_from_json("{"), std::runtime_error);
  EXPECT_THROW(source_map_from_json("[{\"target\": 1}]"), std::runtime_error);
  EXPECT_THROW(source_map_from_json("{\"a\": 1}"), std::runtime_error);
}

TEST(SourceMap, EmptyMap) {
  EXPECT_TRUE(source_map_from_json(source_map_to_json({})).entries.empty());
}

}  // namespace
}  // namespace yaps
