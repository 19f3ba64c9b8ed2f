#include <benchmark/benchmark.h>

#include "kleitman/constructions.hpp"

namespace {

void BM_greedy_packing(benchmark::State& state) {
  for (auto _ : state) {
    auto res = kleitman::constructions::greedy_packing(static_cast<int>(state.range(0)), 3, 1);
    benchmark::DoNotOptimize(res.achieved());
  }
}
BENCHMARK(BM_greedy_packing)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
