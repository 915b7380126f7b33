// Serial reference vs OpenMP kernels: F_p rank and the minor expansion.

#include <benchmark/benchmark.h>

#include <random>

#include "detlab/constructions.hpp"
#include "detlab/kernels.hpp"
#include "detlab/matrix.hpp"

using namespace detlab;

namespace {

kernels::ModMatrix random_mod_matrix(std::size_t n, std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  kernels::ModMatrix m(n, n + n / 4, p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = dist(rng);
  }
  return m;
}

void BM_RankSerial(benchmark::State& state) {
  auto m = random_mod_matrix(static_cast<std::size_t>(state.range(0)), 32003, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_serial(m));
}

void BM_RankParallel(benchmark::State& state) {
  auto m = random_mod_matrix(static_cast<std::size_t>(state.range(0)), 32003, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_parallel(m));
}

PolyMatrix bench_matrix(std::size_t t, std::size_t q) { return random_linear_matrix(t, q, 8, 3); }

void BM_MinorsReference(benchmark::State& state) {
  auto m = bench_matrix(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(minors_reference(m, m.rows()));
}

void BM_MinorsMemoized(benchmark::State& state) {
  auto m = bench_matrix(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(minors(m, m.rows()));
}

}  // namespace

BENCHMARK(BM_RankSerial)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsReference)->Args({3, 6})->Args({4, 7})->Args({5, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsMemoized)->Args({3, 6})->Args({4, 7})->Args({5, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
