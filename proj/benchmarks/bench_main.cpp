#include <benchmark/benchmark.h>

#include "permred/lattice.hpp"
#include "permred/preservation.hpp"
#include "permred/ramsey.hpp"

using namespace permred;

static void BM_EnumerateLattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice());
}
BENCHMARK(BM_EnumerateLattice)->Unit(benchmark::kMillisecond);

static void BM_FullTable(benchmark::State& state) {
  const auto lattice = enumerate_lattice();
  Budget budget;
  budget.max_size = static_cast<std::size_t>(state.range(0));
  const bool witnesses = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(full_table(lattice, budget, witnesses));
}
BENCHMARK(BM_FullTable)
    ->ArgsProduct({{4, 5, 6}, {0, 1}})
    ->ArgNames({"max_size", "witnesses"})
    ->Unit(benchmark::kMillisecond);

static void BM_GeneratorPreserves(benchmark::State& state) {
  const WordTemplate turn{GeneratorKind::TurnFirst};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (auto r : kAllRelations) benchmark::DoNotOptimize(generator_preserves(turn, r, n));
}
BENCHMARK(BM_GeneratorPreserves)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_RamseySearch(benchmark::State& state) {
  const auto point = Pattern::parse("1");
  const auto omega = Pattern::parse("12");
  for (auto _ : state) benchmark::DoNotOptimize(search_witness(point, omega, 4));
}
BENCHMARK(BM_RamseySearch);

static void BM_RamseyCheck(benchmark::State& state) {
  // Points of a size-n increasing host: 2^n colorings.
  std::vector<int> ranks(static_cast<std::size_t>(state.range(0)));
  std::iota(ranks.begin(), ranks.end(), 0);
  const Pattern host(ranks);
  const auto point = Pattern::parse("1");
  const auto omega = Pattern::parse("123");
  for (auto _ : state) benchmark::DoNotOptimize(check_ramsey_witness(host, point, omega));
}
BENCHMARK(BM_RamseyCheck)->DenseRange(4, 12, 4);
BENCHMARK_MAIN();
