#include <benchmark/benchmark.h>

#include "kleitman/solver.hpp"

namespace {

void BM_max_family_even(benchmark::State& state) {
  kleitman::DistanceSpec d({2, 4});
  for (auto _ : state) {
    auto res = kleitman::solver::max_family(static_cast<int>(state.range(0)), d);
    benchmark::DoNotOptimize(res.best_family.size());
  }
}
BENCHMARK(BM_max_family_even)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_max_family_nonhomog(benchmark::State& state) {
  kleitman::DistanceSpec d({4, 10});
  for (auto _ : state) {
    auto res = kleitman::solver::max_family(9, d);
    benchmark::DoNotOptimize(res.best_family.size());
  }
}
BENCHMARK(BM_max_family_nonhomog)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
