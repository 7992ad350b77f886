#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "state_io.hpp"

namespace {

using fgem::cli::CommonOptions;

void add_common(CLI::App* cmd, CommonOptions& opts, const std::string& default_format) {
  opts.format = default_format;
  cmd->add_option("--out", opts.out_path, "Write the report to this path instead of stdout");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Geometric multipartite entanglement for fermionic mode systems: "
      "measures over mode partitions, Hubbard dimer/trimer sweeps, and "
      "entanglement maximization"};
  app.require_subcommand(1);

  // measure
  std::string state_path, partition_spec;
  bool normalize = false;
  CommonOptions measure_opts;
  auto* measure = app.add_subcommand(
      "measure", "Compute tensor norm, separable norm and E for a state file");
  measure->add_option("state-file", state_path, "JSON state file")->required();
  measure->add_option("partition", partition_spec, "Partition spec, e.g. \"1,2|3,4\"")
      ->required();
  measure->add_flag("--normalize", normalize, "Rescale an unnormalized input state");
  add_common(measure, measure_opts, "json");

  // sweep-dimer
  double d_start = 1.0, d_stop = 10.0;
  int d_points = 19;
  CommonOptions dimer_opts;
  auto* sweep_dimer = app.add_subcommand(
      "sweep-dimer", "Dimer ground-state entanglement curves over an alpha grid");
  sweep_dimer->add_option("--start", d_start, "First alpha value (>= 1)");
  sweep_dimer->add_option("--stop", d_stop, "Last alpha value");
  sweep_dimer->add_option("--points", d_points, "Grid size");
  add_common(sweep_dimer, dimer_opts, "csv");

  // sweep-trimer
  double t_start = 0.0, t_stop = 20.0, t_hopping = 1.0;
  int t_points = 81;
  CommonOptions trimer_opts;
  auto* sweep_trimer = app.add_subcommand(
      "sweep-trimer", "Trimer ground-state entanglement curves over a beta grid");
  sweep_trimer->add_option("--start", t_start, "First beta value");
  sweep_trimer->add_option("--stop", t_stop, "Last beta value");
  sweep_trimer->add_option("--points", t_points, "Grid size");
  sweep_trimer->add_option("--t", t_hopping, "Hopping energy t > 0");
  add_common(sweep_trimer, trimer_opts, "csv");

  // maximize
  int m_modes = 4, m_particles = 2, m_restarts = 200, m_max_iterations = 2000,
      m_threads = 0;
  std::uint64_t m_seed = 0;
  std::string m_partition;
  CommonOptions maximize_opts;
  auto* maximize = app.add_subcommand(
      "maximize", "Maximize E over normalized states of a fixed-N sector");
  maximize->add_option("modes", m_modes, "Mode count 2L")->required();
  maximize->add_option("particles", m_particles, "Particle number N")->required();
  maximize->add_option("partition", m_partition, "Partition spec")->required();
  maximize->add_option("--restarts", m_restarts, "Independent restarts");
  maximize->add_option("--seed", m_seed, "Master seed");
  maximize->add_option("--max-iterations", m_max_iterations, "Poll cycles per restart");
  maximize->add_option("--threads", m_threads, "Worker threads (0 = auto)");
  add_common(maximize, maximize_opts, "json");

  // perturb
  double p_alpha = 1.0, p_beta = 1.0, p_eps = 1e-4;
  fgem::PerturbationParams p_params;
  std::string p_partition;
  CommonOptions perturb_opts;
  auto* perturb = app.add_subcommand(
      "perturb", "First-order entanglement response of the four-mode test state");
  perturb->add_option("partition", p_partition, "Partition spec")->required();
  perturb->add_option("--alpha", p_alpha, "Test state alpha (alpha^2 + beta^2 = 2)");
  perturb->add_option("--beta", p_beta, "Test state beta");
  perturb->add_option("--f", p_params.inter_site_hop, "Inter-site hop coupling");
  perturb->add_option("--q", p_params.density_density, "Density-density coupling");
  perturb->add_option("--Gamma", p_params.mode1_potential, "Mode-1 potential");
  perturb->add_option("--gamma", p_params.mode3_potential, "Mode-3 potential");
  perturb->add_option("--eta", p_params.intra_site_hop, "Intra-site hop coupling");
  perturb->add_option("--eps-step", p_eps, "Central-difference step");
  add_common(perturb, perturb_opts, "json");

  // sector-dims
  int s_modes = 4, s_particles = -1;
  CommonOptions sector_opts;
  auto* sector_dims =
      app.add_subcommand("sector-dims", "Fixed-N sector dimensions of a mode space");
  sector_dims->add_option("modes", s_modes, "Mode count 2L")->required();
  sector_dims->add_option("particles", s_particles, "Particle number (omit for all)");
  add_common(sector_dims, sector_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? fgem::cli::kOk : fgem::cli::kParseError;
  }

  try {
    if (*measure) {
      fgem::cli::cmd_measure(state_path, partition_spec, normalize, measure_opts);
    } else if (*sweep_dimer) {
      fgem::cli::cmd_sweep_dimer(d_start, d_stop, d_points, dimer_opts);
    } else if (*sweep_trimer) {
      fgem::cli::cmd_sweep_trimer(t_start, t_stop, t_points, t_hopping, trimer_opts);
    } else if (*maximize) {
      fgem::cli::cmd_maximize(m_modes, m_particles, m_partition, m_restarts, m_seed,
                              m_max_iterations, m_threads, maximize_opts);
    } else if (*perturb) {
      fgem::cli::cmd_perturb(p_alpha, p_beta, p_params, p_eps, p_partition,
                             perturb_opts);
    } else if (*sector_dims) {
      fgem::cli::cmd_sector_dims(s_modes, s_particles, sector_opts);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return fgem::cli::kParseError;
  } catch (const fgem::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return fgem::cli::kValidationError;
  } catch (const fgem::cli::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return fgem::cli::kIoError;
  } catch (const fgem::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return fgem::cli::kNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fgem::cli::kNumericError;
  }
  return fgem::cli::kOk;
}
