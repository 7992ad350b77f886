#include "fgem/sugen.hpp"

#include <cmath>
#include <complex>

namespace fgem {

GeneratorSet su_generators(int dimension) {
  if (dimension < 2) throw ValidationError("SU(d) generators need d >= 2");
  const int d = dimension;
  GeneratorSet set;
  set.dimension = d;
  set.matrices.reserve(static_cast<std::size_t>(d) * d - 1);

  // |j><k| + |k><j|
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      set.matrices.push_back(std::move(m));
    }
  }
  // -i(|j><k| - |k><j|)
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      m(j, k) = std::complex<double>(0.0, -1.0);
      m(k, j) = std::complex<double>(0.0, 1.0);
      set.matrices.push_back(std::move(m));
    }
  }
  // sqrt(2/(l(l+1))) (|1><1| + ... + |l><l| - l |l+1><l+1|)
  for (int l = 1; l < d; ++l) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int i = 0; i < l; ++i) m(i, i) = scale;
    m(l, l) = -scale * l;
    set.matrices.push_back(std::move(m));
  }
  return set;
}

}  // namespace fgem
