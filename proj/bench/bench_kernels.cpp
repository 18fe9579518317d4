// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <string>

#include "wonderful/closure_poset.hpp"
#include "wonderful/matrix_model.hpp"

namespace {

using namespace wonderful;

const char* const kTypes[] = {"A2", "B2", "G2", "A3", "B3"};

void closure_relation_kernel(benchmark::State& state, Execution mode) {
  const OrbitCalculus calc(build_root_system(cartan_of_type(kTypes[state.range(0)])));
  for (auto _ : state) benchmark::DoNotOptimize(closure_relation(calc, mode));
  state.SetLabel(std::string(kTypes[state.range(0)]) + ", " + std::to_string(calc.orbit_count()) + " labels");
}

void transitive_reduction_kernel(benchmark::State& state, Execution mode) {
  const OrbitCalculus calc(build_root_system(cartan_of_type(kTypes[state.range(0)])));
  const std::vector<Bitset> below = closure_relation(calc);
  for (auto _ : state) benchmark::DoNotOptimize(transitive_reduction(below, mode));
  state.SetLabel(kTypes[state.range(0)]);
}

void orbit_partition_kernel(benchmark::State& state, Execution mode) {
  const MatrixModel model(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(model, mode));
  state.SetLabel(std::to_string(model.size()) + " points");
}

}  // namespace

BENCHMARK_CAPTURE(closure_relation_kernel, serial, Execution::Serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closure_relation_kernel, parallel, Execution::Parallel)
    ->DenseRange(0, 4)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(transitive_reduction_kernel, serial, Execution::Serial)
    ->DenseRange(0, 4)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(transitive_reduction_kernel, parallel, Execution::Parallel)
    ->DenseRange(0, 4)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(orbit_partition_kernel, serial, Execution::Serial)
    ->Args({2, 5})
    ->Args({3, 2})
    ->Args({3, 3})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(orbit_partition_kernel, parallel, Execution::Parallel)
    ->Args({2, 5})
    ->Args({3, 2})
    ->Args({3, 3})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
