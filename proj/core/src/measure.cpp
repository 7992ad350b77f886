#include "fgem/measure.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "fgem/sugen.hpp"

namespace fgem {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kImagTol = 1e-10;

void require_normalized(const StateVector& v) {
  if (std::abs(v.norm() - 1.0) > kNormTol) {
    throw ValidationError("state is not normalized");
  }
}

std::vector<std::uint64_t> axis_strides(const std::vector<int>& dims) {
  std::vector<std::uint64_t> stride(dims.size());
  std::uint64_t acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    stride[k] = acc;
    acc *= static_cast<std::uint64_t>(dims[k]);
  }
  return stride;
}

// out = (g acting on the given axis) amps, leaving all other axes alone.
void apply_to_axis(const Eigen::VectorXcd& amps, const Eigen::MatrixXcd& g,
                   std::uint64_t stride, int d, Eigen::VectorXcd& out) {
  const auto n = static_cast<std::uint64_t>(amps.size());
  const std::uint64_t block = stride * static_cast<std::uint64_t>(d);
  for (std::uint64_t base = 0; base < n; base += block) {
    for (int row = 0; row < d; ++row) {
      const std::uint64_t out_off = base + static_cast<std::uint64_t>(row) * stride;
      for (std::uint64_t lo = 0; lo < stride; ++lo) {
        Complex acc{0.0, 0.0};
        for (int col = 0; col < d; ++col) {
          acc += g(row, col) * amps[static_cast<Eigen::Index>(
                     base + static_cast<std::uint64_t>(col) * stride + lo)];
        }
        out[static_cast<Eigen::Index>(out_off + lo)] = acc;
      }
    }
  }
}

// Correlation entries over the listed axes (row-major in that order), with
// prefactor prod d_k/2 over the listed axes only. Generators are applied one
// axis at a time, reusing partial contractions depth-first.
std::vector<double> correlation_entries(const GroupedState& g,
                                        const std::vector<std::size_t>& axes) {
  const auto& dims = g.partition().dims();
  const auto strides = axis_strides(dims);

  double prefactor = 1.0;
  std::vector<GeneratorSet> gens;
  gens.reserve(axes.size());
  std::size_t total = 1;
  for (std::size_t axis : axes) {
    prefactor *= dims[axis] / 2.0;
    gens.push_back(su_generators(dims[axis]));
    total *= static_cast<std::size_t>(dims[axis] * dims[axis] - 1);
  }

  std::vector<double> entries(total);
  std::vector<Eigen::VectorXcd> levels(axes.size() + 1);
  levels[0] = g.amplitudes();
  for (std::size_t i = 1; i < levels.size(); ++i) {
    levels[i].resize(g.amplitudes().size());
  }

  std::size_t cursor = 0;
  auto descend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == axes.size()) {
      const Complex value = g.amplitudes().dot(levels[depth]);
      if (std::abs(value.imag()) * prefactor > kImagTol) {
        throw NumericError("correlation tensor entry has imaginary residue");
      }
      entries[cursor++] = prefactor * value.real();
      return;
    }
    const std::size_t axis = axes[depth];
    for (const auto& lambda : gens[depth].matrices) {
      apply_to_axis(levels[depth], lambda, strides[axis], dims[axis], levels[depth + 1]);
      self(self, depth + 1);
    }
  };
  descend(descend, 0);
  return entries;
}

}  // namespace

double CorrelationTensor::norm() const {
  double sq = 0.0;
  for (double t : entries) sq += t * t;
  return std::sqrt(sq);
}

double CorrelationTensor::entry(std::span<const int> alphas) const {
  if (alphas.size() != axis_sizes.size()) {
    throw ValidationError("correlation tensor index rank mismatch");
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (alphas[k] < 0 || alphas[k] >= axis_sizes[k]) {
      throw ValidationError("correlation tensor index out of range");
    }
    flat = flat * static_cast<std::size_t>(axis_sizes[k]) + static_cast<std::size_t>(alphas[k]);
  }
  return entries[flat];
}

CorrelationTensor correlation_tensor(const StateVector& v, const Partition& p) {
  require_normalized(v);
  const GroupedState g = group_state(v, p);
  std::vector<std::size_t> axes(p.subset_count());
  for (std::size_t k = 0; k < axes.size(); ++k) axes[k] = k;

  CorrelationTensor tensor{p, {}, {}};
  tensor.axis_sizes.reserve(axes.size());
  for (int d : p.dims()) tensor.axis_sizes.push_back(d * d - 1);
  tensor.entries = correlation_entries(g, axes);
  return tensor;
}

double sep_norm(const Partition& p) {
  double value = 1.0;
  for (int d : p.dims()) {
    value *= std::sqrt(static_cast<double>(d) * (d - 1) / 2.0);
  }
  return value;
}

MeasureResult geometric_entanglement(const StateVector& v, const Partition& p) {
  const double tnorm = correlation_tensor(v, p).norm();
  const double snorm = sep_norm(p);
  return MeasureResult{tnorm, snorm, tnorm - snorm};
}

double von_neumann_entropy(const StateVector& v, const Partition& p) {
  if (p.subset_count() != 2) {
    throw ValidationError("von Neumann entropy needs a bipartition");
  }
  require_normalized(v);
  const DensityMatrix rho = reduced_density(group_state(v, p), {1});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(),
                                                         Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i];
    if (lambda > 1e-14) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

Eigen::VectorXd bloch_vector(const GroupedState& g, std::size_t subset_index) {
  if (subset_index >= g.partition().subset_count()) {
    throw ValidationError("subset index out of range");
  }
  const auto entries = correlation_entries(g, {subset_index});
  return Eigen::Map<const Eigen::VectorXd>(entries.data(),
                                           static_cast<Eigen::Index>(entries.size()));
}

DensityMatrix reconstruct_density(const StateVector& v, const Partition& p) {
  require_normalized(v);
  const GroupedState g = group_state(v, p);
  const auto& dims = p.dims();
  const std::size_t m = dims.size();
  const auto n = static_cast<Eigen::Index>(p.total_dim());

  std::vector<GeneratorSet> gens;
  gens.reserve(m);
  for (int d : dims) gens.push_back(su_generators(d));

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(n, n);
  // One term per nonempty axis subset; entry coefficients carry prod d_k/2
  // over the subset, so each term contributes coeff * kron(factors).
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> axes;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (1u << k)) axes.push_back(k);
    }
    const auto entries = correlation_entries(g, axes);

    std::vector<int> alphas(axes.size(), 0);
    for (double coeff : entries) {
      if (coeff != 0.0) {
        Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(1, 1);
        std::size_t pos = 0;
        for (std::size_t k = 0; k < m; ++k) {
          const Eigen::MatrixXcd& factor =
              (mask & (1u << k))
                  ? gens[k].matrices[static_cast<std::size_t>(alphas[pos++])]
                  : Eigen::MatrixXcd::Identity(dims[k], dims[k]).eval();
          Eigen::MatrixXcd next(term.rows() * factor.rows(), term.cols() * factor.cols());
          for (Eigen::Index r = 0; r < term.rows(); ++r) {
            for (Eigen::Index c = 0; c < term.cols(); ++c) {
              next.block(r * factor.rows(), c * factor.cols(), factor.rows(),
                         factor.cols()) = term(r, c) * factor;
            }
          }
          term.swap(next);
        }
        rho += coeff * term;
      }
      // advance the mixed-radix multi-index over the active axes
      for (std::size_t k = axes.size(); k-- > 0;) {
        if (++alphas[k] < dims[axes[k]] * dims[axes[k]] - 1) break;
        alphas[k] = 0;
      }
    }
  }
  rho /= static_cast<double>(p.total_dim());
  return DensityMatrix(std::move(rho));
}

double subset_purity(const GroupedState& g, std::uint32_t keep_mask) {
  const auto& dims = g.partition().dims();
  const std::size_t m = dims.size();
  const auto strides = axis_strides(dims);
  if (keep_mask == 0) {
    const double nsq = g.amplitudes().squaredNorm();
    return nsq * nsq;
  }

  std::uint64_t dim_keep = 1, dim_rest = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (keep_mask & (1u << k)) {
      dim_keep *= static_cast<std::uint64_t>(dims[k]);
    } else {
      dim_rest *= static_cast<std::uint64_t>(dims[k]);
    }
  }
  Eigen::MatrixXcd arranged(static_cast<Eigen::Index>(dim_keep),
                            static_cast<Eigen::Index>(dim_rest));
  const auto& amps = g.amplitudes();
  for (Eigen::Index flat = 0; flat < amps.size(); ++flat) {
    std::uint64_t row = 0, col = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const auto digit = (static_cast<std::uint64_t>(flat) / strides[k]) %
                         static_cast<std::uint64_t>(dims[k]);
      if (keep_mask & (1u << k)) {
        row = row * static_cast<std::uint64_t>(dims[k]) + digit;
      } else {
        col = col * static_cast<std::uint64_t>(dims[k]) + digit;
      }
    }
    arranged(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps[flat];
  }
  return (arranged * arranged.adjoint()).squaredNorm();
}

double tensor_norm_squared(const GroupedState& g) {
  const auto& dims = g.partition().dims();
  const std::size_t m = dims.size();
  const std::uint32_t full = (1u << m) - 1;
  double total = 0.0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    double coefficient = ((m - std::popcount(mask)) % 2) ? -1.0 : 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double d = dims[k];
      coefficient *= (mask & (1u << k)) ? d * d : d;
    }
    // For pure states Tr[rho_T^2] = Tr[rho_{T^c}^2]; evaluate the cheaper side.
    std::uint64_t dim_keep = 1;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (1u << k)) dim_keep *= static_cast<std::uint64_t>(dims[k]);
    }
    const std::uint32_t side =
        (dim_keep * dim_keep <= g.partition().total_dim()) ? mask : (full & ~mask);
    total += coefficient * subset_purity(g, side);
  }
  return total / static_cast<double>(std::uint64_t{1} << m);
}

}  // namespace fgem
