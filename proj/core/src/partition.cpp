#include "fgem/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace fgem {

Partition::Partition(int mode_count, std::vector<std::vector<int>> subsets)
    : mode_count_(mode_count), subsets_(std::move(subsets)) {
  if (mode_count_ < 1) throw ValidationError("partition needs a positive mode count");
  if (subsets_.size() < 2) throw ValidationError("partition needs at least two subsets");
  std::vector<int> seen(static_cast<std::size_t>(mode_count_) + 1, 0);
  for (std::size_t k = 0; k < subsets_.size(); ++k) {
    auto& subset = subsets_[k];
    if (subset.empty()) {
      throw ValidationError("subset " + std::to_string(k + 1) + " is empty");
    }
    std::sort(subset.begin(), subset.end());
    for (int mode : subset) {
      if (mode < 1 || mode > mode_count_) {
        throw ValidationError("mode " + std::to_string(mode) + " is out of range 1.." +
                              std::to_string(mode_count_));
      }
      if (seen[static_cast<std::size_t>(mode)]++) {
        throw ValidationError("mode " + std::to_string(mode) +
                              " appears in more than one subset");
      }
    }
  }
  for (int mode = 1; mode <= mode_count_; ++mode) {
    if (!seen[static_cast<std::size_t>(mode)]) {
      throw ValidationError("mode " + std::to_string(mode) + " is not covered by any subset");
    }
  }
  dims_.reserve(subsets_.size());
  for (const auto& subset : subsets_) dims_.push_back(1 << subset.size());
}

Partition Partition::parse(std::string_view spec, int mode_count) {
  std::vector<std::vector<int>> subsets;
  std::string text(spec);
  std::stringstream subset_stream(text);
  std::string subset_text;
  while (std::getline(subset_stream, subset_text, '|')) {
    std::vector<int> subset;
    std::stringstream mode_stream(subset_text);
    std::string mode_text;
    while (std::getline(mode_stream, mode_text, ',')) {
      const auto first = mode_text.find_first_not_of(" \t");
      const auto last = mode_text.find_last_not_of(" \t");
      if (first == std::string::npos) {
        throw ValidationError("empty mode index in partition spec '" + text + "'");
      }
      int mode = 0;
      const char* begin = mode_text.data() + first;
      const char* end = mode_text.data() + last + 1;
      auto [ptr, ec] = std::from_chars(begin, end, mode);
      if (ec != std::errc{} || ptr != end) {
        throw ValidationError("invalid mode index '" + mode_text + "' in partition spec");
      }
      subset.push_back(mode);
    }
    subsets.push_back(std::move(subset));
  }
  return Partition(mode_count, std::move(subsets));
}

std::uint64_t Partition::total_dim() const {
  std::uint64_t n = 1;
  for (int d : dims_) n *= static_cast<std::uint64_t>(d);
  return n;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < subsets_.size(); ++k) {
    if (k) out.push_back('|');
    for (std::size_t i = 0; i < subsets_[k].size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(subsets_[k][i]);
    }
  }
  return out;
}

GroupedState::GroupedState(Partition partition, Eigen::VectorXcd amplitudes)
    : partition_(std::move(partition)), amps_(std::move(amplitudes)) {
  if (amps_.size() != static_cast<Eigen::Index>(partition_.total_dim())) {
    throw ValidationError("grouped amplitude count does not match partition dimension");
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> grouping_weights(const Partition& p) {
  // stride_k of axis k in the row-major flat index
  const auto& dims = p.dims();
  std::vector<std::uint64_t> stride(dims.size());
  std::uint64_t acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    stride[k] = acc;
    acc *= static_cast<std::uint64_t>(dims[k]);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> weights;
  weights.reserve(static_cast<std::size_t>(p.mode_count()));
  for (std::size_t k = 0; k < p.subset_count(); ++k) {
    const auto& subset = p.subset(k);
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const std::uint64_t label_bit = std::uint64_t{1}
                                      << bit_position(subset[j], p.mode_count());
      const std::uint64_t weight = stride[k] << (subset.size() - 1 - j);
      weights.emplace_back(label_bit, weight);
    }
  }
  return weights;
}

GroupedState group_state(const StateVector& v, const Partition& p) {
  if (v.mode_count() != p.mode_count()) {
    throw ValidationError("state and partition mode counts differ");
  }
  const auto weights = grouping_weights(p);
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(p.total_dim()));
  v.for_each_nonzero([&](std::uint64_t label, Complex a) {
    std::uint64_t flat = 0;
    for (const auto& [bit, weight] : weights) {
      if (label & bit) flat += weight;
    }
    amps[static_cast<Eigen::Index>(flat)] = a;
  });
  return GroupedState(p, std::move(amps));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : mat_(std::move(matrix)) {
  if (mat_.rows() != mat_.cols()) throw NumericError("density matrix must be square");
  const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) throw NumericError("density matrix is not Hermitian");
  if (std::abs(mat_.trace().real() - 1.0) > 1e-9 || std::abs(mat_.trace().imag()) > 1e-10) {
    throw NumericError("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat_,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw NumericError("density matrix has a negative eigenvalue");
  }
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

DensityMatrix reduced_density(const GroupedState& g, const std::vector<int>& keep) {
  const auto& dims = g.partition().dims();
  const std::size_t m = dims.size();
  if (keep.empty()) throw ValidationError("keep list is empty");
  std::vector<bool> kept(m, false);
  for (int pos : keep) {
    if (pos < 1 || static_cast<std::size_t>(pos) > m) {
      throw ValidationError("keep position " + std::to_string(pos) + " is out of range");
    }
    if (kept[static_cast<std::size_t>(pos - 1)]) {
      throw ValidationError("keep position " + std::to_string(pos) + " repeated");
    }
    kept[static_cast<std::size_t>(pos - 1)] = true;
  }

  std::vector<std::uint64_t> stride(m);
  std::uint64_t acc = 1;
  for (std::size_t k = m; k-- > 0;) {
    stride[k] = acc;
    acc *= static_cast<std::uint64_t>(dims[k]);
  }
  std::uint64_t dim_keep = 1, dim_rest = 1;
  for (int pos : keep) dim_keep *= static_cast<std::uint64_t>(dims[static_cast<std::size_t>(pos - 1)]);
  for (std::size_t k = 0; k < m; ++k) {
    if (!kept[k]) dim_rest *= static_cast<std::uint64_t>(dims[k]);
  }

  // Rearrange psi into a (kept x traced) matrix; rho = M M^dagger.
  Eigen::MatrixXcd arranged(static_cast<Eigen::Index>(dim_keep),
                            static_cast<Eigen::Index>(dim_rest));
  const auto& amps = g.amplitudes();
  for (Eigen::Index flat = 0; flat < amps.size(); ++flat) {
    std::uint64_t row = 0, col = 0;
    for (int pos : keep) {
      const std::size_t k = static_cast<std::size_t>(pos - 1);
      const auto digit = (static_cast<std::uint64_t>(flat) / stride[k]) %
                         static_cast<std::uint64_t>(dims[k]);
      row = row * static_cast<std::uint64_t>(dims[k]) + digit;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (kept[k]) continue;
      const auto digit = (static_cast<std::uint64_t>(flat) / stride[k]) %
                         static_cast<std::uint64_t>(dims[k]);
      col = col * static_cast<std::uint64_t>(dims[k]) + digit;
    }
    arranged(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps[flat];
  }
  return DensityMatrix(arranged * arranged.adjoint());
}

}  // namespace fgem
