#include "fgem/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <thread>

namespace fgem {

namespace {

// Evaluates E = ||tau|| - ||tau||_sep on unit sector-coefficient vectors via
// the purity identity, with per-mask index tables built once. Not shared
// across threads (owns scratch storage).
class EntanglementObjective {
 public:
  EntanglementObjective(const SectorBasis& basis, const Partition& partition)
      : sep_norm_(sep_norm(partition)) {
    const auto& dims = partition.dims();
    const std::size_t m = dims.size();
    const std::uint32_t full = (1u << m) - 1;
    scale_ = 1.0 / static_cast<double>(std::uint64_t{1} << m);

    // grouped flat index of every sector basis label
    const auto weights = grouping_weights(partition);
    std::vector<std::uint64_t> flat(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::uint64_t f = 0;
      for (const auto& [bit, weight] : weights) {
        if (basis.labels[i] & bit) f += weight;
      }
      flat[i] = f;
    }

    std::vector<std::uint64_t> stride(m);
    std::uint64_t acc = 1;
    for (std::size_t k = m; k-- > 0;) {
      stride[k] = acc;
      acc *= static_cast<std::uint64_t>(dims[k]);
    }

    auto mask_coefficient = [&](std::uint32_t mask) {
      double c = ((m - std::popcount(mask)) % 2) ? -1.0 : 1.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double d = dims[k];
        c *= (mask & (1u << k)) ? d * d : d;
      }
      return c;
    };

    // Empty and full subsets both have purity 1 on normalized pure input.
    constant_ = mask_coefficient(0) + mask_coefficient(full);

    // Proper subsets pair with their complements (equal purity for pure
    // states); evaluate each pair once on the smaller-dimension side.
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::uint64_t dim_keep = 1;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask & (1u << k)) dim_keep *= static_cast<std::uint64_t>(dims[k]);
      }
      const std::uint64_t dim_rest = (acc / dim_keep);
      const std::uint32_t partner = full & ~mask;
      if (dim_keep > dim_rest || (dim_keep == dim_rest && mask > partner)) continue;

      MaskPlan plan;
      plan.coefficient = mask_coefficient(mask) + mask_coefficient(partner);
      plan.rows.resize(basis.size());
      plan.cols.resize(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint64_t row = 0, col = 0;
        for (std::size_t k = 0; k < m; ++k) {
          const auto digit = (flat[i] / stride[k]) % static_cast<std::uint64_t>(dims[k]);
          if (mask & (1u << k)) {
            row = row * static_cast<std::uint64_t>(dims[k]) + digit;
          } else {
            col = col * static_cast<std::uint64_t>(dims[k]) + digit;
          }
        }
        plan.rows[i] = static_cast<Eigen::Index>(row);
        plan.cols[i] = static_cast<Eigen::Index>(col);
      }
      plan.scratch.resize(static_cast<Eigen::Index>(dim_keep),
                          static_cast<Eigen::Index>(dim_rest));
      plan.gram.resize(static_cast<Eigen::Index>(dim_keep),
                       static_cast<Eigen::Index>(dim_keep));
      plans_.push_back(std::move(plan));
    }
  }

  double operator()(const Eigen::VectorXcd& coords) {
    double total = constant_;
    for (auto& plan : plans_) {
      plan.scratch.setZero();
      for (Eigen::Index i = 0; i < coords.size(); ++i) {
        plan.scratch(plan.rows[static_cast<std::size_t>(i)],
                     plan.cols[static_cast<std::size_t>(i)]) = coords[i];
      }
      plan.gram.noalias() = plan.scratch * plan.scratch.adjoint();
      total += plan.coefficient * plan.gram.squaredNorm();
    }
    const double norm_sq = std::max(total * scale_, 0.0);
    return std::sqrt(norm_sq) - sep_norm_;
  }

  double separable_norm() const { return sep_norm_; }

 private:
  struct MaskPlan {
    double coefficient = 0.0;
    std::vector<Eigen::Index> rows;
    std::vector<Eigen::Index> cols;
    Eigen::MatrixXcd scratch;
    Eigen::MatrixXcd gram;
  };

  double sep_norm_;
  double constant_ = 0.0;
  double scale_ = 1.0;
  std::vector<MaskPlan> plans_;
};

void pin_phase(Eigen::VectorXcd& coords) {
  Eigen::Index argmax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    const double mag = std::norm(coords[i]);
    if (mag > best) {
      best = mag;
      argmax = i;
    }
  }
  const Complex c = coords[argmax];
  const double mag = std::abs(c);
  if (mag > 0.0) coords *= std::conj(c) / mag;
}

void gauge_fix_first_nonzero(Eigen::VectorXcd& coords) {
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    const double mag = std::abs(coords[i]);
    if (mag > 1e-12) {
      coords *= std::conj(coords[i]) / mag;
      return;
    }
  }
}

struct RestartOutcome {
  double best_value = 0.0;
  Eigen::VectorXcd coords;
  int iterations = 0;
  std::uint64_t evaluations = 0;
  bool converged = false;
};

RestartOutcome run_restart(EntanglementObjective& objective, Eigen::Index n,
                           const OptConfig& config, int restart_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(restart_index), 0x9e3779b9u};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;

  Eigen::VectorXcd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = Complex{gauss(rng), gauss(rng)};
  x /= x.norm();
  pin_phase(x);

  RestartOutcome out;
  double fx = objective(x);
  out.evaluations = 1;

  constexpr double kStepMin = 1e-7;
  double step = 0.3;
  Eigen::VectorXcd y(n);
  while (out.iterations < config.max_iterations) {
    ++out.iterations;
    double gain = 0.0;
    for (Eigen::Index d = 0; d < 2 * n; ++d) {
      const Eigen::Index coord = d % n;
      const Complex delta = (d < n) ? Complex{step, 0.0} : Complex{0.0, step};
      for (const double sign : {1.0, -1.0}) {
        y = x;
        y[coord] += sign * delta;
        y /= y.norm();
        pin_phase(y);
        const double fy = objective(y);
        ++out.evaluations;
        if (fy > fx) {
          gain += fy - fx;
          x.swap(y);
          fx = fy;
        }
      }
    }
    if (gain < config.tolerance) {
      step *= 0.5;
      if (step < kStepMin) {
        out.converged = true;
        break;
      }
    }
  }
  out.best_value = fx;
  out.coords = std::move(x);
  return out;
}

}  // namespace

OptProblem::OptProblem(SectorBasis basis_, Partition partition_)
    : basis(std::move(basis_)), partition(std::move(partition_)) {
  if (basis.mode_count != partition.mode_count()) {
    throw ValidationError("sector and partition mode counts differ");
  }
}

OptResult maximize_entanglement(const OptProblem& problem, const OptConfig& config) {
  if (config.restarts < 1) throw ValidationError("restarts must be >= 1");
  const auto n = static_cast<Eigen::Index>(problem.basis.size());

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  std::atomic<int> next{0};
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int thread_count = std::clamp(
      config.threads > 0 ? config.threads : std::max(hw, 1), 1, config.restarts);

  auto worker = [&] {
    EntanglementObjective objective(problem.basis, problem.partition);
    for (int index = next.fetch_add(1); index < config.restarts;
         index = next.fetch_add(1)) {
      outcomes[static_cast<std::size_t>(index)] =
          run_restart(objective, n, config, index);
    }
  };
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  OptResult result{0.0, StateVector(problem.basis.mode_count), 0, {}, 0};
  result.records.reserve(outcomes.size());
  int best = 0;
  for (int i = 0; i < config.restarts; ++i) {
    const auto& o = outcomes[static_cast<std::size_t>(i)];
    result.records.push_back(
        {i, o.best_value, o.iterations, o.evaluations, o.converged});
    result.total_evaluations += o.evaluations;
    if (o.best_value > outcomes[static_cast<std::size_t>(best)].best_value) best = i;
  }
  result.best_restart = best;

  Eigen::VectorXcd coords = outcomes[static_cast<std::size_t>(best)].coords;
  gauge_fix_first_nonzero(coords);
  result.best_state = state_from_coordinates(problem.basis, coords);

  const double reevaluated =
      geometric_entanglement(result.best_state, problem.partition).entanglement;
  if (std::abs(reevaluated - outcomes[static_cast<std::size_t>(best)].best_value) >
      1e-10) {
    throw NumericError("optimizer objective disagrees with the tensor route");
  }
  result.best_entanglement = reevaluated;
  return result;
}

}  // namespace fgem
