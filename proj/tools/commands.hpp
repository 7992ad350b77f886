#pragma once

#include <cstdint>
#include <string>

#include "fgem/dynamics.hpp"

namespace fgem::cli {

struct CommonOptions {
  std::string out_path;   // empty = stdout
  std::string format;     // "csv" or "json"
};

void cmd_measure(const std::string& state_path, const std::string& partition_spec,
                 bool normalize, const CommonOptions& opts);

void cmd_sweep_dimer(double start, double stop, int points, const CommonOptions& opts);

void cmd_sweep_trimer(double start, double stop, int points, double hopping,
                      const CommonOptions& opts);

void cmd_maximize(int modes, int particles, const std::string& partition_spec,
                  int restarts, std::uint64_t seed, int max_iterations, int threads,
                  const CommonOptions& opts);

void cmd_perturb(double alpha, double beta, const PerturbationParams& params,
                 double eps_step, const std::string& partition_spec,
                 const CommonOptions& opts);

void cmd_sector_dims(int modes, int particles /* -1 = all */, const CommonOptions& opts);

}  // namespace fgem::cli
