// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "troptp/kernels.hpp"
#include "troptp/parametrization.hpp"
#include "troptp/puiseux.hpp"

using namespace troptp;

namespace {

TropMatrix random_matrix(std::size_t n, long lo, long hi, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  TropMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(lo + static_cast<long>(engine() % (hi - lo + 1)));
  return a;
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_OptimalPermutations(benchmark::State& state) {
  // a narrow entry range produces many tied optima
  const TropMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 0, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_permutations(a, exec_of(state)));
}

void BM_MinorSigns(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropMatrix a = random_matrix(n, -5, 5, 2);
  const auto minors = enumerate_minors(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(minor_signs(a, minors, exec_of(state)));
  state.counters["minors"] = static_cast<double>(minors.size());
}

void BM_LiftedMinorDeterminants(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const KMatrix m = k_transfer(lift_weights(gen_weights(n, WeightMode::Strict, 3), 4));
  const auto minors = enumerate_minors(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(k_minor_determinants(m, minors, exec_of(state)));
  state.counters["minors"] = static_cast<double>(minors.size());
}

}  // namespace

BENCHMARK(BM_OptimalPermutations)->ArgsProduct({{6, 7, 8}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorSigns)->ArgsProduct({{5, 6}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftedMinorDeterminants)->ArgsProduct({{3, 4, 5}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
