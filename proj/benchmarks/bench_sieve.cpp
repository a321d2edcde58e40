#include <benchmark/benchmark.h>

#include "cubeperm/sieve.hpp"

using namespace cubeperm;

static void BM_CountW(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  const std::vector<std::uint64_t> cps = {limit};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_members(CongruenceSelector::cube_bijective(), limit, cps, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountW)->RangeMultiplier(10)->Range(100'000, 100'000'000)->Unit(benchmark::kMillisecond);

static void BM_CountWThreads(benchmark::State& state) {
  const std::uint64_t limit = 100'000'000;
  const std::vector<std::uint64_t> cps = {limit};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        count_members(CongruenceSelector::cube_bijective(), limit, cps, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_CountWThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Segment(benchmark::State& state) {
  const std::uint64_t limit = 1'000'000'000;
  SegmentSieve sieve(CongruenceSelector::cube_bijective(), limit);
  SegmentBuffer buf;
  const std::uint64_t lo = limit - kSegmentSize + 1;
  for (auto _ : state) benchmark::DoNotOptimize(sieve.count(lo, limit + 1, buf));
  state.SetItemsProcessed(state.iterations() * kSegmentSize);
}
BENCHMARK(BM_Segment)->Unit(benchmark::kMillisecond);

static void BM_IsMember(benchmark::State& state) {
  const auto w = CongruenceSelector::cube_bijective();
  std::uint64_t n = 1'000'000'007;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_member(n, w));
    n += 2;
  }
}
BENCHMARK(BM_IsMember);

static void BM_Factorize63(benchmark::State& state) {
  std::uint64_t n = 0x7fffffffffffff1bull;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
    n -= 2;
  }
}
BENCHMARK(BM_Factorize63);

static void BM_CubeBijection(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power_map_is_bijection(n, 3));
}
BENCHMARK(BM_CubeBijection)->Arg(99'989)->Arg(99'991);

BENCHMARK_MAIN();
