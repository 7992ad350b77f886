#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fgem/fock.hpp"
#include "fgem/partition.hpp"

namespace fgem {

/// Full-order correlation tensor of a pure state over a partition:
///   t_{a_1...a_m} = (prod_k d_k/2) <psi| lambda^(1)_{a_1} x ... x lambda^(m)_{a_m} |psi>
/// Entries are real; axis k runs over the d_k^2-1 generators of SU(d_k) in
/// set order (0-based here).
struct CorrelationTensor {
  Partition partition;
  std::vector<int> axis_sizes;   // d_k^2 - 1 per axis
  std::vector<double> entries;   // row-major over (a_1 ... a_m)

  double norm() const;
  double entry(std::span<const int> alphas) const;
};

CorrelationTensor correlation_tensor(const StateVector& v, const Partition& p);

/// Tensor norm of any pure product state over the partition:
/// prod_k sqrt(d_k (d_k - 1) / 2).
double sep_norm(const Partition& p);

struct MeasureResult {
  double tensor_norm = 0.0;
  double separable_norm = 0.0;
  double entanglement = 0.0;  // tensor_norm - separable_norm, never clamped
};

MeasureResult geometric_entanglement(const StateVector& v, const Partition& p);

/// Von Neumann entropy (base-2) of the first subset's reduced state; the
/// partition must be a bipartition. Eigenvalues below 1e-14 contribute zero.
double von_neumann_entropy(const StateVector& v, const Partition& p);

/// Bloch vector of subset k (0-based): s_a = (d_k/2) <psi| lambda^(k)_a |psi>.
Eigen::VectorXd bloch_vector(const GroupedState& g, std::size_t subset_index);

/// Rebuild the density matrix on the grouped basis from the identity term,
/// all Bloch vectors and all higher-order correlation tensors (2^m terms in
/// total) with overall prefactor 1/(prod_k d_k). For pure input this equals
/// |psi><psi| up to roundoff, which the tests use as a completeness check.
DensityMatrix reconstruct_density(const StateVector& v, const Partition& p);

/// Tr[rho_T^2] for the subset of qudit axes selected by keep_mask (bit k =
/// axis k). The empty mask gives (Tr rho)^2.
double subset_purity(const GroupedState& g, std::uint32_t keep_mask);

/// ||tau||^2 of the full-order correlation tensor, computed from subset
/// purities via generator completeness:
///   ||tau||^2 = 2^-m sum_{T subset of [m]} (-1)^{m-|T|}
///               (prod_{k in T} d_k^2) (prod_{k not in T} d_k) Tr[rho_T^2].
/// Agrees with correlation_tensor(...).norm()^2 and costs far less, so the
/// optimizer uses it as its objective evaluation.
double tensor_norm_squared(const GroupedState& g);

}  // namespace fgem
