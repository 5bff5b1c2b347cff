#include <benchmark/benchmark.h>

#include "sfast/io.hpp"
#include "sfast/solve.hpp"
#include "sfast/xcheck.hpp"

using namespace sfast;

namespace {

Instance bench_instance(int n) {
  GenParams p;
  p.n = n;
  p.k = 3;
  p.terminal_fraction = 0.4;
  p.seed = 12345;
  return generate(p);
}

void BM_ExactOrderSerial(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_order(inst).optimum);
}

void BM_ExactOrderParallel(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_order_parallel(inst).optimum);
}

XcheckConfig bench_config(int trials) {
  XcheckConfig c;
  c.n_max = 9;
  c.k_max = 3;
  c.trials = trials;
  c.seed = 7;
  return c;
}

void BM_XcheckSerial(benchmark::State& state) {
  const XcheckConfig c = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_xcheck(c).trials);
}

void BM_XcheckParallel(benchmark::State& state) {
  const XcheckConfig c = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_xcheck_parallel(c).trials);
}

}  // namespace

BENCHMARK(BM_ExactOrderSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactOrderParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_XcheckSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_XcheckParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
