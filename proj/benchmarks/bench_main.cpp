#include <benchmark/benchmark.h>

#include "tropica/tropica.hpp"

using namespace tropica;

static void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = elliptic::enumerate_feynman_graphs(static_cast<int>(state.range(0)), true);
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(graphs::canonical_encoding(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(4);

static void BM_LineCovers(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Partition ones(std::vector<int>(static_cast<std::size_t>(d), 1));
  for (auto _ : state) benchmark::DoNotOptimize(line::double_hurwitz_tropical(1, Partition({d}), ones));
}
BENCHMARK(BM_LineCovers)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_LineOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Partition ones(std::vector<int>(static_cast<std::size_t>(d), 1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::hurwitz_line(1, Partition({d}), ones));
}
BENCHMARK(BM_LineOracle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_EllipticLabeled(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(elliptic::simple_hurwitz_tropical(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_EllipticLabeled)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_EllipticDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(elliptic::simple_hurwitz_direct(static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_EllipticDirect)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_FeynmanGraphSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(feynman::feynman_graph_sum(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FeynmanGraphSum)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_ChamberPolynomials(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (const auto& c : chambers::chamber_decomposition(2, l)) benchmark::DoNotOptimize(chambers::chamber_polynomial(c));
}
BENCHMARK(BM_ChamberPolynomials)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GraphComplexHomology(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 4; n <= 9; ++n) benchmark::DoNotOptimize(gc::homology_dimension(static_cast<int>(state.range(0)), n));
}
BENCHMARK(BM_GraphComplexHomology)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ModuliTypes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(moduli::enumerate_types(0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ModuliTypes)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
