#include <benchmark/benchmark.h>

#include "kleitman/spectral.hpp"

namespace {

void BM_cvetkovic(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = kleitman::spectral::cvetkovic_bound(static_cast<int>(state.range(0)), 3);
    benchmark::DoNotOptimize(rep.bound);
  }
}
BENCHMARK(BM_cvetkovic)->Arg(10)->Arg(14);

void BM_verify_spectrum(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = kleitman::spectral::verify_spectrum(static_cast<int>(state.range(0)), 2);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_verify_spectrum)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
