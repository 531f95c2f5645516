// Serial reference recursion versus the anti-diagonal sweep at 1 and N threads.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "parking/counting.hpp"
#include "parking/genfun.hpp"
#include "parking/reference.hpp"

using namespace parking;

namespace {

int max_threads() { return omp_get_max_threads(); }

void BM_CountReference(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::count(n, 1));
}

void BM_CountSweep(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const int threads = st.range(1) ? max_threads() : 1;
  for (auto _ : st) benchmark::DoNotOptimize(count(n, 1, threads));
  st.counters["threads"] = threads;
}

void BM_GenfunReference(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::area_genfun(n, 1));
}

void BM_GenfunSweep(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const int threads = st.range(1) ? max_threads() : 1;
  for (auto _ : st) benchmark::DoNotOptimize(area_genfun(n, 1, {threads, 0}));
  st.counters["threads"] = threads;
}

void BM_JetReference(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::jet_leibniz(n, 1, 6));
}

void BM_JetSweep(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const int threads = st.range(1) ? max_threads() : 1;
  for (auto _ : st) benchmark::DoNotOptimize(jet_at_one(n, 1, 6, {threads, 0}));
  st.counters["threads"] = threads;
}

}  // namespace

BENCHMARK(BM_CountReference)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSweep)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenfunReference)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenfunSweep)->ArgsProduct({{20, 30}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JetReference)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JetSweep)->ArgsProduct({{20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
