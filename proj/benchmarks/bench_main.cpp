#include <benchmark/benchmark.h>

#include "wreathfh/catalog.hpp"
#include "wreathfh/class_algebra.hpp"
#include "wreathfh/fh_ring.hpp"
#include "wreathfh/wreath.hpp"

using namespace wfh;

namespace {

ClassPartitionMap P(ClassIndex c, Partition p) { return ClassPartitionMap{{c, std::move(p)}}; }

void BM_EnumerateClass(benchmark::State& state) {
  AdeGroup g = make_symmetric(3);
  WreathContext ctx(g.group, g.classes);
  const int n = static_cast<int>(state.range(0));
  const ClassPartitionMap mu{{0, Partition{1}}, {1, Partition{1}}};
  std::int64_t visited = 0;
  for (auto _ : state) {
    enumerate_class(ctx, n, mu, [&](const WreathElement&) { ++visited; });
  }
  state.SetItemsProcessed(visited);
}
BENCHMARK(BM_EnumerateClass)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Convolve(benchmark::State& state) {
  AdeGroup g = make_cyclic(2);
  WreathContext ctx(g.group, g.classes);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convolve(ctx, n, P(0, {1, 1}), P(1, {1, 1})));
}
BENCHMARK(BM_Convolve)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_PairCountThreads(benchmark::State& state) {
  AdeGroup g = make_symmetric(3);
  WreathContext ctx(g.group, g.classes);
  OracleOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  const ClassPartitionMap a = P(0, {1}), b = P(1, {2});
  for (auto _ : state) benchmark::DoNotOptimize(pair_count(ctx, 4, a, b, union_of(a, b), opt));
}
BENCHMARK(BM_PairCountThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SingleCycleClosedForm(benchmark::State& state) {
  FHContext ctx = FHContext::from(make_binary_polyhedral(Polyhedral::BT).classes);
  const ClassPartitionMap lambda{{0, Partition{2, 1}}, {2, Partition{1}}, {3, Partition{2}}};
  for (auto _ : state) benchmark::DoNotOptimize(single_cycle_product_nontrivial(ctx, lambda, 3, 2));
}
BENCHMARK(BM_SingleCycleClosedForm)->Unit(benchmark::kMicrosecond);

void BM_GeneralProduct(benchmark::State& state) {
  FHContext ctx = FHContext::from(make_cyclic(3).classes);
  const int d = static_cast<int>(state.range(0));
  auto basis = pfns_of_degree(d, 3);
  for (auto _ : state) {
    // fresh ring each round so the memo does not hide the work
    FHRing ring(ctx);
    for (std::size_t i = 0; i < basis.size(); i += 3) benchmark::DoNotOptimize(ring.product(basis[i], basis.back()));
  }
}
BENCHMARK(BM_GeneralProduct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BinaryIcosahedral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_binary_polyhedral(Polyhedral::BI));
}
BENCHMARK(BM_BinaryIcosahedral)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
