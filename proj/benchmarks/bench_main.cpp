#include <benchmark/benchmark.h>

#include <random>

#include "ssetkit/covering_engine.hpp"
#include "ssetkit/face_oracle.hpp"

using namespace ssetkit;

namespace {
SufficientStatistics ek(int n, int k) { return character_matrix(n, interaction_complex_k(n, k)); }
}  // namespace

// One facial LP per iteration on random subsets of {0,1}^4.
static void BM_FacialProbe(benchmark::State& state) {
  FaceOracle oracle(ek(4, static_cast<int>(state.range(0))));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> mask(1, 0xffff);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.facial(SampleSubset::from_mask(16, mask(rng))).facial);
}
BENCHMARK(BM_FacialProbe)->Arg(1)->Arg(2)->Arg(3);

static void BM_EnumerateFaces(benchmark::State& state) {
  auto stats = ek(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facial_sets(stats).faces.size());
}
BENCHMARK(BM_EnumerateFaces)->Args({3, 1})->Args({3, 2})->Args({4, 1})->Unit(benchmark::kMillisecond);

static void BM_MinSSetCover(benchmark::State& state) {
  auto stats = ek(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(min_sset_cover(stats, SampleSubset::full(16)).kappa);
}
BENCHMARK(BM_MinSSetCover)->Unit(benchmark::kMillisecond);

static void BM_RecursiveCover(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(recursive_binary_cover(static_cast<int>(state.range(0)), 2).sets.size());
}
BENCHMARK(BM_RecursiveCover)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
