#include <benchmark/benchmark.h>

#include <random>

#include "fgem/measure.hpp"
#include "fgem/models.hpp"
#include "fgem/optimize.hpp"

using namespace fgem;

namespace {

StateVector trimer_ground_state() {
  const HamiltonianMatrix h = trimer_hamiltonian(TrimerParams(1.0, 2.0));
  const EigenSolution sol = diagonalize(h);
  return state_from_coordinates(h.basis, sol.ground_multiplet.col(0));
}

void BM_GroupState(benchmark::State& state) {
  const StateVector v = trimer_ground_state();
  const Partition sites(6, {{1, 2}, {3, 4}, {5, 6}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_state(v, sites));
  }
}
BENCHMARK(BM_GroupState);

void BM_CorrelationTensor_ThreeSites(benchmark::State& state) {
  const StateVector v = trimer_ground_state();
  const Partition sites(6, {{1, 2}, {3, 4}, {5, 6}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_tensor(v, sites).norm());
  }
}
BENCHMARK(BM_CorrelationTensor_ThreeSites);

void BM_CorrelationTensor_SixSingles(benchmark::State& state) {
  const StateVector v = trimer_ground_state();
  const Partition singles(6, {{1}, {2}, {3}, {4}, {5}, {6}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_tensor(v, singles).norm());
  }
}
BENCHMARK(BM_CorrelationTensor_SixSingles);

void BM_PurityNormSquared(benchmark::State& state) {
  const StateVector v = trimer_ground_state();
  const Partition sites(6, {{1, 2}, {3, 4}, {5, 6}});
  const GroupedState g = group_state(v, sites);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_norm_squared(g));
  }
}
BENCHMARK(BM_PurityNormSquared);

void BM_TrimerDiagonalize(benchmark::State& state) {
  const TrimerParams params(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonalize(trimer_hamiltonian(params)).eigenvalues[0]);
  }
}
BENCHMARK(BM_TrimerDiagonalize);

void BM_MaximizeSingleRestart(benchmark::State& state) {
  const OptProblem problem(enumerate_sector(4, 2), Partition(4, {{1, 2}, {3, 4}}));
  OptConfig config;
  config.restarts = 1;
  config.threads = 1;
  for (auto _ : state) {
    config.seed = static_cast<std::uint64_t>(state.iterations());
    benchmark::DoNotOptimize(maximize_entanglement(problem, config).best_entanglement);
  }
}
BENCHMARK(BM_MaximizeSingleRestart);

}  // namespace

BENCHMARK_MAIN();
