#include <benchmark/benchmark.h>

#include <random>

#include "scissors/chain_complex.hpp"
#include "scissors/fixtures.hpp"
#include "scissors/homology.hpp"
#include "scissors/snf.hpp"
#include "scissors/triangulation.hpp"

namespace {

using namespace scissors;

/// Sparse {-1, 0, 1} matrix shaped like a boundary map.
IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(0, 19);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int r = entry(rng);
      m(i, j) = r == 0 ? 1 : r == 1 ? -1 : 0;
    }
  return m;
}

void BM_SnfParallel(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, Transforms::forward));
}

void BM_SnfSerial(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form_serial(m, Transforms::forward));
}

/// Boundary matrices of the 4-torus: d_2 * d_3 exercises the sparse product.
struct TorusBoundaries {
  SparseMatrix d2, d3;
  TorusBoundaries() {
    const ChainComplex c = FaceLattice(fixtures::fixture("t4")).chains();
    d2 = c.boundary(2);
    d3 = c.boundary(3);
  }
};

void BM_MultiplyParallel(benchmark::State& state) {
  static const TorusBoundaries t;
  for (auto _ : state) benchmark::DoNotOptimize(multiply(t.d2, t.d3));
}

void BM_MultiplySerial(benchmark::State& state) {
  static const TorusBoundaries t;
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(t.d2, t.d3));
}

void BM_HomologyReduced(benchmark::State& state) {
  const ChainComplex c = FaceLattice(fixtures::fixture("t4")).chains();
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
}

}  // namespace

BENCHMARK(BM_SnfParallel)->Arg(40)->Arg(60)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnfSerial)->Arg(40)->Arg(60)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyReduced)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
