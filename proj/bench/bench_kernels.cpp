// Serial reference vs OpenMP kernels on the products the library actually
// forms: dense theta-quotient style series and the twisted pentagonal
// products in Z[w]. Set OMP_NUM_THREADS to compare scaling.

#include <benchmark/benchmark.h>

#include <random>

#include "qseries/cyclotomic.hpp"
#include "qseries/kernels.hpp"
#include "qseries/multisection.hpp"

using namespace qseries;

namespace {

ScaledSeries dense_series(std::int64_t trunc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  std::vector<Integer> c(static_cast<std::size_t>(trunc));
  for (auto& x : c) x = coeff(rng);
  return ScaledSeries::from_dense(1, std::move(c));
}

template <bool Parallel>
void BM_Mul(benchmark::State& state) {
  const auto a = dense_series(state.range(0), 1);
  const auto b = dense_series(state.range(0), 2);
  for (auto _ : state) {
    auto out = Parallel ? kernels::mul_parallel(a.terms(), b.terms(), a.trunc())
                        : kernels::mul_serial(a.terms(), b.terms(), a.trunc());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_CycMul(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const int order = static_cast<int>(n);
  const auto pent = pentagonal_root_series(prime_context(n), state.range(1));
  const auto a = twisted_product(pent, order);
  const auto b = omega_twist(pent, order, 1);
  for (auto _ : state) {
    auto out = Parallel ? kernels::cyc_mul_parallel(a.terms(), b.terms(), a.trunc(), order)
                        : kernels::cyc_mul_serial(a.terms(), b.terms(), a.trunc(), order);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = Parallel ? kernels::max_threads() : 1;
}

}  // namespace

BENCHMARK(BM_Mul<false>)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Mul<true>)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycMul<false>)->Args({7, 40})->Args({11, 30})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycMul<true>)->Args({7, 40})->Args({11, 30})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
