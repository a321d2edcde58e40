#include <benchmark/benchmark.h>

#include "cubeperm/asymptotics.hpp"
#include "cubeperm/characters.hpp"
#include "cubeperm/special_functions.hpp"
#include "cubeperm/zetadist.hpp"

using namespace cubeperm;

static void BM_HurwitzZeta(benchmark::State& state) {
  double q = 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_zeta(2.0, q));
    q = q < 1.0 ? q + 1e-3 : 0.25;
  }
}
BENCHMARK(BM_HurwitzZeta);

static void BM_P2Accelerated(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(p2(1e-12));
}
BENCHMARK(BM_P2Accelerated);

static void BM_P2Truncated(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(progression_euler_product(3, 2, 1, 2, limit));
}
BENCHMARK(BM_P2Truncated)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_CharactersMod(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(characters_mod(m));
}
BENCHMARK(BM_CharactersMod)->Arg(48)->Arg(1000);

static void BM_ZetaSampler(benchmark::State& state) {
  ZetaSampler z(static_cast<double>(state.range(0)) / 2.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(z());
}
BENCHMARK(BM_ZetaSampler)->Arg(3)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
