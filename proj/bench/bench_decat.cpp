// Serial reference vs OpenMP state sum vs factored evaluation on corpus tangles.

#include "khdecat/decat.hpp"
#include "khdecat/tangle_io.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace khdecat;

const char* const kFiles[] = {"kt", "kt_in", "kt_out", "sum", "bridge3"};

TangleDiagram load(int index) { return load_tangle(std::string(KHDECAT_CORPUS) + "/" + kFiles[index] + ".tangle"); }

void label(benchmark::State& state, const TangleDiagram& t) {
  state.SetLabel(t.name + " (" + std::to_string(t.crossings.size()) + " crossings)");
}

void BM_serial(benchmark::State& state) {
  const TangleDiagram t = load(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decat_vector_serial(t));
  label(state, t);
}

void BM_parallel(benchmark::State& state) {
  const TangleDiagram t = load(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(decat_vector(t, threads));
  label(state, t);
}

void BM_factored(benchmark::State& state) {
  const TangleDiagram t = load(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decat_vector_factored(t));
  label(state, t);
}

constexpr int kCount = static_cast<int>(std::size(kFiles));

}  // namespace

BENCHMARK(BM_serial)->DenseRange(0, kCount - 1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)
    ->ArgsProduct({benchmark::CreateDenseRange(0, kCount - 1, 1), {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_factored)->DenseRange(0, kCount - 1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
