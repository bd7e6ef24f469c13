#include <benchmark/benchmark.h>

#include <random>

#include "binomrank/characterization.hpp"
#include "binomrank/gf2.hpp"
#include "binomrank/parity.hpp"
#include "binomrank/systems.hpp"
#include "binomrank/validation.hpp"

using namespace binomrank;

namespace {

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Gf2Matrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1) a.set(r, c, true);
  return a;
}

void BM_rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Gf2Matrix a = random_matrix(n, n, 0x5eed + n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
  state.SetComplexityN(state.range(0));
}

void BM_solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Gf2Matrix a = random_matrix(n, n, 0xab1e + n);
  Gf2Vector b(n);
  std::mt19937_64 rng(0xb0b + n);
  for (std::size_t r = 0; r < n; ++r)
    if (rng() & 1) b.set(r, true);
  for (auto _ : state) benchmark::DoNotOptimize(solve_report(a, b));
}

void BM_build_basic(benchmark::State& state) {
  const std::int64_t k = state.range(0), l = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_problem_i({163, 7, k, l}));
}

void BM_build_split(benchmark::State& state) {
  const std::int64_t k = state.range(0), l = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_problem_ii({91, 72, 7, k, l, 8}));
}

void BM_odd_positions(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(odd_positions(m));
}

void BM_enumerate_basic(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  EnumerationBounds bounds{16, 16, 8};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_problem_i(m, 3, bounds));
}

void BM_audit_row(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(audit_structure_facts(m));
}

void BM_cross_validate_basic(benchmark::State& state) {
  ValidationOptions opts;
  opts.bounds = {16, 16, 8};
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate_i(37, 5, opts));
}

void BM_cross_validate_split(benchmark::State& state) {
  ValidationOptions opts;
  opts.bounds = {8, 8, 4};
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate_ii(11, 6, 4, opts));
}

BENCHMARK(BM_rank)->Arg(64)->Arg(256)->Arg(1024)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_solve)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_build_basic)->Arg(16)->Arg(64);
BENCHMARK(BM_build_split)->Arg(16)->Arg(64);
BENCHMARK(BM_odd_positions)->Arg(255)->Arg(4096)->Arg(65535);
BENCHMARK(BM_enumerate_basic)->Arg(37)->Arg(163);
BENCHMARK(BM_audit_row)->Arg(255)->Arg(4096);
BENCHMARK(BM_cross_validate_basic)->Arg(1)->Arg(4);
BENCHMARK(BM_cross_validate_split)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
