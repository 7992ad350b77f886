#include "commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgem/measure.hpp"
#include "fgem/models.hpp"
#include "fgem/optimize.hpp"
#include "fgem/partition.hpp"
#include "state_io.hpp"

namespace fgem::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void emit_json(const ordered_json& doc, const CommonOptions& opts) {
  write_output(doc.dump(2) + "\n", opts.out_path);
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line.push_back(',');
    line += cells[i];
  }
  line.push_back('\n');
  return line;
}

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void emit_table(const SweepTable& table, const CommonOptions& opts) {
  if (opts.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json obj;
      for (std::size_t c = 0; c < table.header.size(); ++c) obj[table.header[c]] = row[c];
      rows.push_back(std::move(obj));
    }
    emit_json(rows, opts);
    return;
  }
  std::string text = csv_line(table.header);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (double v : row) cells.push_back(format_number(v));
    text += csv_line(cells);
  }
  write_output(text, opts.out_path);
}

std::vector<double> uniform_grid(double start, double stop, int points) {
  if (points < 2) throw ValidationError("grid needs at least 2 points");
  if (!(start <= stop)) throw ValidationError("grid start must not exceed stop");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        start + (stop - start) * static_cast<double>(i) / (points - 1);
  }
  return grid;
}

}  // namespace

void cmd_measure(const std::string& state_path, const std::string& partition_spec,
                 bool normalize, const CommonOptions& opts) {
  const StateVector v = read_state_file(state_path, normalize);
  const Partition p = Partition::parse(partition_spec, v.mode_count());
  const MeasureResult r = geometric_entanglement(v, p);
  const bool bipartition = p.subset_count() == 2;
  const double entropy = bipartition ? von_neumann_entropy(v, p) : 0.0;

  if (opts.format == "csv") {
    std::vector<std::string> header{"tensor_norm", "separable_norm", "entanglement"};
    std::vector<std::string> cells{format_number(r.tensor_norm),
                                   format_number(r.separable_norm),
                                   format_number(r.entanglement)};
    if (bipartition) {
      header.push_back("von_neumann");
      cells.push_back(format_number(entropy));
    }
    write_output(csv_line(header) + csv_line(cells), opts.out_path);
    return;
  }
  ordered_json doc;
  doc["modes"] = v.mode_count();
  doc["partition"] = p.to_string();
  doc["tensor_norm"] = r.tensor_norm;
  doc["separable_norm"] = r.separable_norm;
  doc["entanglement"] = r.entanglement;
  if (bipartition) doc["von_neumann"] = entropy;
  emit_json(doc, opts);
}

void cmd_sweep_dimer(double start, double stop, int points, const CommonOptions& opts) {
  if (start < 1.0) throw ValidationError("dimer alpha grid must start at >= 1");
  const Partition four_singles(4, {{1}, {2}, {3}, {4}});
  const Partition site(4, {{1, 2}, {3, 4}});
  const Partition one_three(4, {{1}, {2, 3, 4}});

  SweepTable table;
  table.header = {"alpha", "E_g", "E_s", "E_vn", "E_13"};
  for (double alpha : uniform_grid(start, stop, points)) {
    const StateVector v = dimer_ground_state_analytic(DimerParams::from_alpha(alpha));
    table.rows.push_back({alpha,
                          geometric_entanglement(v, four_singles).entanglement,
                          geometric_entanglement(v, site).entanglement,
                          von_neumann_entropy(v, site),
                          geometric_entanglement(v, one_three).entanglement});
  }
  emit_table(table, opts);
}

void cmd_sweep_trimer(double start, double stop, int points, double hopping,
                      const CommonOptions& opts) {
  const Partition six_singles(6, {{1}, {2}, {3}, {4}, {5}, {6}});
  const Partition sites(6, {{1, 2}, {3, 4}, {5, 6}});
  const Partition site_a_bc(6, {{1, 2}, {3, 4, 5, 6}});

  SweepTable table;
  table.header = {"beta", "E_6", "E_site3", "E_bi_A_BC", "E_vn_A_BC"};
  for (double beta : uniform_grid(start, stop, points)) {
    const HamiltonianMatrix h = trimer_hamiltonian(TrimerParams(hopping, beta));
    const EigenSolution sol = diagonalize(h);
    const StateVector ground =
        state_from_coordinates(h.basis, sol.ground_multiplet.col(0));
    table.rows.push_back({beta,
                          geometric_entanglement(ground, six_singles).entanglement,
                          geometric_entanglement(ground, sites).entanglement,
                          geometric_entanglement(ground, site_a_bc).entanglement,
                          von_neumann_entropy(ground, site_a_bc)});
  }
  emit_table(table, opts);
}

void cmd_maximize(int modes, int particles, const std::string& partition_spec,
                  int restarts, std::uint64_t seed, int max_iterations, int threads,
                  const CommonOptions& opts) {
  const OptProblem problem(enumerate_sector(modes, particles),
                           Partition::parse(partition_spec, modes));
  OptConfig config;
  config.restarts = restarts;
  config.seed = seed;
  config.max_iterations = max_iterations;
  config.threads = threads;

  const auto started = std::chrono::steady_clock::now();
  const OptResult result = maximize_entanglement(problem, config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  // wall time goes to stderr so reports stay byte-identical across runs
  std::cerr << "maximize: " << format_number(seconds) << " s, "
            << result.total_evaluations << " objective evaluations\n";

  int converged = 0;
  ordered_json per_restart = ordered_json::array();
  for (const auto& record : result.records) {
    converged += record.converged ? 1 : 0;
    per_restart.push_back({{"restart", record.restart_index},
                           {"value", record.best_value},
                           {"iterations", record.iterations},
                           {"evaluations", record.evaluations},
                           {"converged", record.converged}});
  }

  ordered_json doc;
  doc["modes"] = modes;
  doc["particles"] = particles;
  doc["partition"] = problem.partition.to_string();
  doc["seed"] = seed;
  doc["restarts"] = restarts;
  doc["best"] = {{"entanglement", result.best_entanglement},
                 {"separable_norm", sep_norm(problem.partition)},
                 {"restart", result.best_restart},
                 {"state", state_to_json(result.best_state)}};
  doc["converged_restarts"] = converged;
  doc["total_evaluations"] = result.total_evaluations;
  doc["per_restart"] = std::move(per_restart);
  emit_json(doc, opts);
}

void cmd_perturb(double alpha, double beta, const PerturbationParams& params,
                 double eps_step, const std::string& partition_spec,
                 const CommonOptions& opts) {
  const TestStateParams state_params(alpha, beta);
  const StateVector v = test_state(state_params);
  const Partition p = Partition::parse(partition_spec, 4);

  const double derivative =
      entanglement_derivative(v, perturbation_hamiltonian(params), p, eps_step);

  // dE/deps is linear in the couplings, so unit runs are the partials
  const std::vector<std::pair<std::string, PerturbationParams>> singles{
      {"f", {.inter_site_hop = 1.0}},
      {"q", {.density_density = 1.0}},
      {"Gamma", {.mode1_potential = 1.0}},
      {"gamma", {.mode3_potential = 1.0}},
      {"eta", {.intra_site_hop = 1.0}},
  };
  ordered_json partials;
  ordered_json vanishing = ordered_json::array();
  for (const auto& [name, unit] : singles) {
    const double d =
        entanglement_derivative(v, perturbation_hamiltonian(unit), p, eps_step);
    partials[name] = d;
    if (std::abs(d) <= 1e-8) vanishing.push_back(name);
  }

  ordered_json doc;
  doc["alpha"] = alpha;
  doc["beta"] = beta;
  doc["partition"] = p.to_string();
  doc["eps_step"] = eps_step;
  doc["couplings"] = {{"f", params.inter_site_hop},
                      {"q", params.density_density},
                      {"Gamma", params.mode1_potential},
                      {"gamma", params.mode3_potential},
                      {"eta", params.intra_site_hop}};
  doc["derivative"] = derivative;
  doc["unit_derivatives"] = std::move(partials);
  doc["vanishing"] = std::move(vanishing);
  emit_json(doc, opts);
}

void cmd_sector_dims(int modes, int particles, const CommonOptions& opts) {
  if (modes < 1 || modes > StateVector::kMaxModeCount) {
    throw ValidationError("modes must be in [1, 62]");
  }
  std::vector<std::pair<int, std::uint64_t>> sectors;
  if (particles >= 0) {
    if (particles > modes) throw ValidationError("particle number exceeds mode count");
    sectors.emplace_back(particles, binomial(modes, particles));
  } else {
    for (int n = 0; n <= modes; ++n) sectors.emplace_back(n, binomial(modes, n));
  }

  if (opts.format == "csv") {
    std::string text = csv_line({"particles", "dimension"});
    for (const auto& [n, dim] : sectors) {
      text += csv_line({std::to_string(n), std::to_string(dim)});
    }
    write_output(text, opts.out_path);
    return;
  }
  ordered_json list = ordered_json::array();
  std::uint64_t total = 0;
  for (const auto& [n, dim] : sectors) {
    list.push_back({{"particles", n}, {"dimension", dim}});
    total += dim;
  }
  ordered_json doc;
  doc["modes"] = modes;
  doc["sectors"] = std::move(list);
  if (particles < 0) doc["total"] = total;
  emit_json(doc, opts);
}

}  // namespace fgem::cli
