#pragma once

#include <vector>

#include <Eigen/Core>

#include "fgem/errors.hpp"

namespace fgem {

/// The d^2-1 Hermitian traceless generators of SU(d), normalized so that
/// Tr(lambda_a lambda_b) = 2 delta_ab. Ordering: the symmetric off-diagonal
/// family over pairs j < k in lexicographic order, then the antisymmetric
/// family over the same pairs, then the d-1 diagonal generators.
struct GeneratorSet {
  int dimension = 0;
  std::vector<Eigen::MatrixXcd> matrices;

  std::size_t size() const { return matrices.size(); }
};

GeneratorSet su_generators(int dimension);

}  // namespace fgem
