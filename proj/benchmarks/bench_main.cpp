#include <benchmark/benchmark.h>

#include <string>

#include "yaps/pipeline.hpp"
#include "yaps/roundtrip.hpp"
#include "yaps/stan_emitter.hpp"
#include "yaps/stan_parser.hpp"
#include "yaps/yaps_emitter.hpp"

namespace {

const char* kCoin = R"(import yaps


@yaps.model
def coin(x: int(lower=0, upper=1)[10]):
    theta: real(lower=0, upper=1) <~ uniform(0, 1)
    for i in range(1, 11):
        x[i] <~ bernoulli(theta)
)";

// A long hierarchical model: `groups` copies of a varying-intercept block.
std::string hierarchical_stan(int groups) {
  std::string s = "data {\n  int N;\n  vector[N] y;\n}\nparameters {\n";
  for (int g = 0; g < groups; ++g) {
    s += "  real mu" + std::to_string(g) + ";\n";
    s += "  real<lower=0> sigma" + std::to_string(g) + ";\n";
  }
  s += "}\nmodel {\n";
  for (int g = 0; g < groups; ++g) {
    auto id = std::to_string(g);
    s += "  mu" + id + " ~ normal(0, 10);\n";
    s += "  sigma" + id + " ~ cauchy(0, 5);\n";
    s += "  for (n in 1 : N) {\n    y[n] ~ normal(mu" + id + ", sigma" + id + ");\n  }\n";
  }
  s += "}\n";
  return s;
}

void BM_CompileCoin(benchmark::State& state) {
  for (auto _ : state) {
    auto result = yaps::compile_yaps(kCoin, "coin.py");
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_CompileCoin);

void BM_CompileAndEmitCoin(benchmark::State& state) {
  for (auto _ : state) {
    auto result = yaps::compile_yaps(kCoin, "coin.py");
    auto emitted = yaps::emit_stan(*result.program);
    benchmark::DoNotOptimize(emitted);
  }
}
BENCHMARK(BM_CompileAndEmitCoin);

void BM_ParseStan(benchmark::State& state) {
  std::string source = hierarchical_stan(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = yaps::parse_stan(source);
    benchmark::DoNotOptimize(result);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_ParseStan)->Arg(1)->Arg(16)->Arg(128);

void BM_EmitYaps(benchmark::State& state) {
  auto program = *yaps::parse_stan(hierarchical_stan(static_cast<int>(state.range(0)))).program;
  for (auto _ : state) {
    auto result = yaps::emit_yaps(program);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_EmitYaps)->Arg(1)->Arg(16)->Arg(128);

void BM_RoundTrip(benchmark::State& state) {
  std::string source = hierarchical_stan(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = yaps::roundtrip_source(source, "bench.stan");
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_RoundTrip)->Arg(1)->Arg(16)->Arg(128);

}  // namespace
BENCHMARK_MAIN();
