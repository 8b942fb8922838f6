// Serial reference kernels against their OpenMP counterparts. The thread count
// is the benchmark argument; results are identical by construction, so only
// time is compared.

#include <benchmark/benchmark.h>

#include "distid/bounds.hpp"
#include "distid/mc.hpp"

namespace {

using namespace distid;

void BM_ErrorProbSerial(benchmark::State& state) {
  const auto family = make_family(BinaryGrid{8, 0.1, 0.9});
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_error_prob_serial(family, 100, 2000, Seed{1}));
  }
}
BENCHMARK(BM_ErrorProbSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ErrorProbParallel(benchmark::State& state) {
  const auto family = make_family(BinaryGrid{8, 0.1, 0.9});
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_error_prob(family, 100, 2000, Seed{1}, workers));
  }
}
BENCHMARK(BM_ErrorProbParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SwapEventsSerial(benchmark::State& state) {
  const FinitePmf p({0.5, 0.5});
  const FinitePmf q({0.9, 0.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_swap_events_serial(p, q, 40, 100000, Seed{2}));
  }
}
BENCHMARK(BM_SwapEventsSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SwapEventsParallel(benchmark::State& state) {
  const FinitePmf p({0.5, 0.5});
  const FinitePmf q({0.9, 0.1});
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_swap_events(p, q, 40, 100000, Seed{2}, workers));
  }
}
BENCHMARK(BM_SwapEventsParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PairwiseDistanceSerial(benchmark::State& state) {
  const auto family = make_family(RandomSimplex{300, 64, Seed{3}});
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_bhattacharyya_serial(family));
}
BENCHMARK(BM_PairwiseDistanceSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PairwiseDistanceParallel(benchmark::State& state) {
  const auto family = make_family(RandomSimplex{300, 64, Seed{3}});
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_bhattacharyya(family));
}
BENCHMARK(BM_PairwiseDistanceParallel)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
