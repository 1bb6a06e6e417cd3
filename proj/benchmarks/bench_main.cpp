#include <benchmark/benchmark.h>

#include "iesieve/coloring.hpp"
#include "iesieve/generators.hpp"
#include "iesieve/hampath.hpp"
#include "iesieve/kpath.hpp"
#include "iesieve/matchings.hpp"
#include "iesieve/parallel.hpp"
#include "iesieve/transforms.hpp"

using namespace iesieve;

static void BM_ChromaticNumber(benchmark::State& state) {
  const Graph g = random_graph(static_cast<unsigned>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

static void BM_CoverCountPolyspace(benchmark::State& state) {
  const Graph g = random_graph(static_cast<unsigned>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cover_count(g, 3, CoverMethod::Polyspace));
}
BENCHMARK(BM_CoverCountPolyspace)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_PermanentGray(benchmark::State& state) {
  const Matrix01 a = random_matrix01(static_cast<unsigned>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser_gray(a));
}
BENCHMARK(BM_PermanentGray)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_PermanentPlain(benchmark::State& state) {
  const Matrix01 a = random_matrix01(static_cast<unsigned>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser(a));
}
BENCHMARK(BM_PermanentPlain)->DenseRange(12, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_ZetaYates(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  SetFunction<Count> f(n);
  for (std::uint64_t s = 0; s < f.size(); ++s) f[s] = static_cast<long>(s % 7);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_yates(f));
}
BENCHMARK(BM_ZetaYates)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_HamiltonianFrom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<unsigned>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_count_from(g, 0));
}
BENCHMARK(BM_HamiltonianFrom)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_KPathStatistic(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const Graph g = random_connected_graph(50, 0.04, 1);
  const auto rnd = KPathRandomness::generate(1, g, k);
  for (auto _ : state) benchmark::DoNotOptimize(kpath_statistic(g, k, 0, rnd));
}
BENCHMARK(BM_KPathStatistic)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
