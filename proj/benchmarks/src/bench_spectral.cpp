#include <benchmark/benchmark.h>

#include "expforge/certify.hpp"
#include "expforge/gadget.hpp"
#include "expforge/grassmann.hpp"
#include "expforge/spectral.hpp"

namespace {

using namespace expforge;

void BM_BipartiteLambda2(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto g = sample_biregular(n, n, 6, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_lambda2(g));
  state.SetComplexityN(n);
}
// Crosses the dense/iterative switch.
BENCHMARK(BM_BipartiteLambda2)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_BuildingLambda2(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto g = building_bipartite(3, q, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_lambda2(g));
}
BENCHMARK(BM_BuildingLambda2)->Arg(2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SkeletonOrientation(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto skel = skeletonize(sample_biregular(n, n, 4, 4, 9), Side::left);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_outdegree_orientation(skel));
}
BENCHMARK(BM_SkeletonOrientation)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace
