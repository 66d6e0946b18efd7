#include <benchmark/benchmark.h>

#include "gaussmap/gaussian_maps.hpp"
#include "gaussmap/matrix.hpp"
#include "gaussmap/random.hpp"
#include "gaussmap/schiffer.hpp"

using namespace gaussmap;

// A fresh Curve each iteration so the series cache does not hide the work.
static void BM_XOfZ(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Curve c = default_curve(g);
    benchmark::DoNotOptimize(c.x_of_z(4 * g + 8));
  }
}
BENCHMARK(BM_XOfZ)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_KernelEquations(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_chain_via_equations(g, (g - 1) / 2));
}
BENCHMARK(BM_KernelEquations)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_KernelOracle(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_chain_via_polynomial_oracle(g, (g - 1) / 2));
}
BENCHMARK(BM_KernelOracle)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_RhoPair(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int k = (g - 3) / 2;
  const QuadricI2 q = kernel_via_equations(g, k).quadrics().front();
  const Curve c = default_curve(g);
  (void)c.x_of_z(4 * g + 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho_pair(q, c, SchifferIndex(2 * k + 1), SchifferIndex(2 * k + 3)));
  }
}
BENCHMARK(BM_RhoPair)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SeededRng rng(1);
  std::vector<RatVector> rows(n, RatVector(n + 3));
  for (auto& r : rows) {
    for (auto& x : r) x = rng.rational(30, 7);
  }
  const RatMatrix m = RatMatrix::from_rows(rows, n + 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
