#include <benchmark/benchmark.h>

#include "realcmp/builtins.hpp"
#include "realcmp/coend.hpp"
#include "realcmp/constructions.hpp"
#include "realcmp/cosimplicial.hpp"
#include "realcmp/homology.hpp"
#include "realcmp/reedy.hpp"
#include "realcmp/tau_rho.hpp"

using namespace realcmp;

static void BM_HomologyFatNerveOr(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const auto d = diagonal(fat(builtin_object("nerve_or", cap)).object());
  for (auto _ : state) benchmark::DoNotOptimize(homology(d, cap - 1));
  state.counters["cells"] = static_cast<double>(d.size(cap));
}
BENCHMARK(BM_HomologyFatNerveOr)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_UnravelCosimplicial(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unravel_cosimplicial(cap, cap, cap + 1));
}
BENCHMARK(BM_UnravelCosimplicial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SubdividedCosimplicial(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subdivided_cosimplicial(cap, cap, cap));
}
BENCHMARK(BM_SubdividedCosimplicial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CoendFat(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const auto x = builtin_object("s2", cap);
  const auto f = fat_cosimplicial(cap, cap);
  for (auto _ : state) benchmark::DoNotOptimize(coend(x, f.object, IndexShape::delta));
}
BENCHMARK(BM_CoendFat)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_LatchingFiltration(benchmark::State& state) {
  const auto x = fat(builtin_object("nerve1", 3)).object();
  for (auto _ : state) benchmark::DoNotOptimize(latching_filtration(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LatchingFiltration)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CheckPiTau(benchmark::State& state) {
  const auto x = builtin_object("s2", 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_pi_tau(x, 5, 2));
}
BENCHMARK(BM_CheckPiTau)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_RhoWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rho_face_counterexample(static_cast<int>(state.range(0)), 12));
}
BENCHMARK(BM_RhoWitness)->DenseRange(1, 3);

BENCHMARK_MAIN();
