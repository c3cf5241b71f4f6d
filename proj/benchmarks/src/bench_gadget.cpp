#include <benchmark/benchmark.h>

#include "expforge/gadget.hpp"

namespace {

using namespace expforge;

void BM_SampleBiregular(benchmark::State& state) {
  const auto D = static_cast<std::uint32_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_biregular(D, D, 8, 8, seed++, true));
  }
  state.SetItemsProcessed(state.iterations() * D * 8);
}
BENCHMARK(BM_SampleBiregular)->RangeMultiplier(2)->Range(16, 256);

void BM_CheckSpread(benchmark::State& state) {
  const auto cap = static_cast<std::uint32_t>(state.range(0));
  const auto h = sample_biregular(48, 48, 8, 8, 7, true);
  const auto family = equal_buckets(48, 6);
  CheckOptions opt;
  opt.size_cap = cap;
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_bucket_spread(h, family, opt));
}
BENCHMARK(BM_CheckSpread)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CheckLossless(benchmark::State& state) {
  const auto h = sample_biregular(48, 48, 8, 8, 7, true);
  CheckOptions opt;
  opt.workers = 1;
  opt.size_cap = static_cast<std::uint32_t>(state.range(0));
  // Certified sizes run up to floor(range * 48 / 8) = state.range(0).
  const double range = static_cast<double>(state.range(0)) / 6.0;
  for (auto _ : state) benchmark::DoNotOptimize(check_lossless(h, 0.5, range, opt));
}
BENCHMARK(BM_CheckLossless)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
