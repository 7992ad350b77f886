#pragma once

#include <cstdint>
#include <vector>

#include "fgem/fock.hpp"
#include "fgem/measure.hpp"
#include "fgem/partition.hpp"

namespace fgem {

/// Maximize the geometric entanglement over normalized pure states of a
/// fixed-N sector for a given partition.
struct OptProblem {
  SectorBasis basis;
  Partition partition;

  OptProblem(SectorBasis basis, Partition partition);
};

struct OptConfig {
  int restarts = 200;
  int max_iterations = 2000;   // poll cycles per restart
  double tolerance = 1e-10;    // objective gain below which the step contracts
  std::uint64_t seed = 0;
  int threads = 0;             // 0 = hardware concurrency
};

struct RestartRecord {
  int restart_index = 0;
  double best_value = 0.0;
  int iterations = 0;
  std::uint64_t evaluations = 0;
  bool converged = false;
};

struct OptResult {
  double best_entanglement = 0.0;  // re-evaluated through the tensor route
  StateVector best_state;          // gauge-fixed: first nonzero amplitude real positive
  int best_restart = 0;
  std::vector<RestartRecord> records;
  std::uint64_t total_evaluations = 0;
};

/// Multi-start compass search over the complex sector coefficients (2 dim(F_N)
/// real coordinates), renormalizing after every trial step and pinning the
/// global phase on the largest coefficient. Restart r draws its starting
/// point from a generator seeded by (config.seed, r), so runs are
/// reproducible and parallel execution returns the serial result; ties on the
/// best value resolve to the lowest restart index. The search evaluates E
/// through tensor_norm_squared and the returned optimum is re-evaluated via
/// correlation_tensor; the two routes must agree to 1e-10.
OptResult maximize_entanglement(const OptProblem& problem, const OptConfig& config = {});

}  // namespace fgem
