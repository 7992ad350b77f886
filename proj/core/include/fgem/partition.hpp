#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "fgem/errors.hpp"
#include "fgem/fock.hpp"

namespace fgem {

/// An ordered disjoint cover of the 2L modes by m >= 2 nonempty subsets,
/// viewing subset k as a qudit of dimension d_k = 2^{|subset_k|}. Subsets
/// keep their listed order; modes inside a subset are stored ascending.
class Partition {
 public:
  Partition(int mode_count, std::vector<std::vector<int>> subsets);

  /// Parse "1,2|3,4" style specs with 1-based mode indices.
  static Partition parse(std::string_view spec, int mode_count);

  int mode_count() const { return mode_count_; }
  std::size_t subset_count() const { return subsets_.size(); }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }
  const std::vector<int>& subset(std::size_t k) const { return subsets_.at(k); }
  const std::vector<int>& dims() const { return dims_; }
  std::uint64_t total_dim() const;
  std::string to_string() const;

 private:
  int mode_count_ = 0;
  std::vector<std::vector<int>> subsets_;
  std::vector<int> dims_;
};

/// A state vector regrouped over a partition's qudits: amplitudes are indexed
/// row-major by the multi-index (i_1 ... i_m), i_k in [0, d_k). Within a
/// subset, the lowest mode index is the most significant bit of i_k, matching
/// the global label convention.
class GroupedState {
 public:
  GroupedState(Partition partition, Eigen::VectorXcd amplitudes);

  const Partition& partition() const { return partition_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  Partition partition_;
  Eigen::VectorXcd amps_;
};

/// Regroup a state vector over the partition's qudits. Non-contiguous
/// subsets permute qubit tensor factors with no fermionic reordering signs.
GroupedState group_state(const StateVector& v, const Partition& p);

/// For each mode, the (label bit, grouped flat-index weight) pair realizing
/// the group_state mapping; exposed so repeated regrouping over a fixed
/// partition can skip the per-call setup.
std::vector<std::pair<std::uint64_t, std::uint64_t>> grouping_weights(const Partition& p);

/// Hermitian, unit-trace, positive semidefinite matrix; the constructor
/// enforces the invariants (eigenvalues >= -1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Eigen::Index dimension() const { return mat_.rows(); }
  double purity() const;

 private:
  Eigen::MatrixXcd mat_;
};

/// Partial trace of |psi><psi| keeping the listed subset positions (1-based,
/// in the listed order) and tracing out the rest.
DensityMatrix reduced_density(const GroupedState& g, const std::vector<int>& keep);

}  // namespace fgem
