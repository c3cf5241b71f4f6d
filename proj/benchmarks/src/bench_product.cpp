#include <benchmark/benchmark.h>

#include "expforge/certify.hpp"
#include "expforge/gadget.hpp"
#include "expforge/grassmann.hpp"
#include "expforge/product.hpp"
#include "expforge/rng.hpp"
#include "expforge/structured.hpp"

namespace {

using namespace expforge;

StructuredBipartite building_base(std::uint32_t q) { return incidence_graph(building_complex(3, q).flags); }

void BM_LineProduct(benchmark::State& state) {
  const auto base = building_base(static_cast<std::uint32_t>(state.range(0)));
  const auto gadget = sample_biregular(base.D, base.D, 2, 2, 5, true);
  for (auto _ : state) benchmark::DoNotOptimize(line_product(base, base, gadget));
  state.counters["z_edges"] = static_cast<double>(line_product(base, base, gadget).z.edge_count());
}
BENCHMARK(BM_LineProduct)->Arg(2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_AnalyzeCollisions(benchmark::State& state) {
  const auto base = building_base(3);
  const auto inst = line_product(base, base, sample_biregular(base.D, base.D, 2, 2, 5, true));
  const auto size = static_cast<std::uint32_t>(state.range(0));
  Rng rng(17);
  for (auto _ : state) {
    const auto s = VertexSet::of(Side::left, sample_subset(rng, inst.z.left_size(), size));
    benchmark::DoNotOptimize(analyze_collisions(inst, s, 0.5, 0.25, 1.0));
  }
}
BENCHMARK(BM_AnalyzeCollisions)->Arg(1)->Arg(4)->Arg(16);

void BM_MeasureUne(benchmark::State& state) {
  const auto base = building_base(2);
  const auto inst = line_product(base, base, sample_biregular(base.D, base.D, 2, 2, 5, true));
  EnumerationOptions opt;
  opt.size_cap = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(measure_une(inst.z, Side::left, opt));
}
BENCHMARK(BM_MeasureUne)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
