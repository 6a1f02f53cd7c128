#include <benchmark/benchmark.h>

#include "pytree/kernels.hpp"

namespace {

using namespace pytree;

void BM_TreeSerial(benchmark::State& state) {
  const BigInt bound = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tree_triples_serial(bound));
}

void BM_TreeOmp(benchmark::State& state) {
  const BigInt bound = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tree_triples_omp(bound));
}

void BM_BruteSerial(benchmark::State& state) {
  const BigInt bound = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::brute_force_triples_serial(bound));
}

void BM_BruteOmp(benchmark::State& state) {
  const BigInt bound = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::brute_force_triples_omp(bound));
}

}  // namespace

BENCHMARK(BM_TreeSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeOmp)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteOmp)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
