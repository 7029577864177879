#include <benchmark/benchmark.h>

#include "gammapos/gammapos.hpp"

using namespace gammapos;

static void BM_QEulerian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_eulerian(n));
}
BENCHMARK(BM_QEulerian)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_GammaTheorem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_gamma_theorem(FamilyTag::kBinomialEulerianQT, n));
}
BENCHMARK(BM_GammaTheorem)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_RibbonSchur(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto method = state.range(1) == 0 ? WordMethod::kDynamic : WordMethod::kExplicit;
  const Ribbon r{n, {1, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(ribbon_schur(r, 5, method));
}
BENCHMARK(BM_RibbonSchur)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMicrosecond);

static void BM_SchurExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = sym_family_poly(SymFamily::kQ, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(schur_expand(q, n, n));
}
BENCHMARK(BM_SchurExpand)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_DualStellohedron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_polynomial(dual_stellohedron(n), n));
}
BENCHMARK(BM_DualStellohedron)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_DualPermutohedron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_flag(dual_permutohedron(n)));
}
BENCHMARK(BM_DualPermutohedron)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
