#include <doctest.h>

#include <cmath>

#include "fgem/sugen.hpp"
#include "oracles.hpp"

using namespace fgem;

TEST_SUITE("sugen") {

TEST_CASE("d2_gives_the_pauli_matrices") {
  const GeneratorSet set = su_generators(2);
  REQUIRE(set.size() == 3);
  Eigen::MatrixXcd x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex{0, -1}, Complex{0, 1}, 0;
  z << 1, 0, 0, -1;
  CHECK((set.matrices[0] - x).cwiseAbs().maxCoeff() == 0.0);
  CHECK((set.matrices[1] - y).cwiseAbs().maxCoeff() == 0.0);
  CHECK((set.matrices[2] - z).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("d3_diagonal_generators") {
  const GeneratorSet set = su_generators(3);
  REQUIRE(set.size() == 8);
  Eigen::MatrixXcd w1 = Eigen::MatrixXcd::Zero(3, 3);
  w1(0, 0) = 1;
  w1(1, 1) = -1;
  Eigen::MatrixXcd w2 = Eigen::MatrixXcd::Zero(3, 3);
  const double s = 1.0 / std::sqrt(3.0);
  w2(0, 0) = s;
  w2(1, 1) = s;
  w2(2, 2) = -2.0 * s;
  CHECK((set.matrices[6] - w1).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((set.matrices[7] - w2).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("d4_family_counts_and_order") {
  const GeneratorSet set = su_generators(4);
  REQUIRE(set.size() == 15);
  // 6 symmetric, then 6 antisymmetric, then 3 diagonal
  for (int i = 0; i < 6; ++i) {
    CHECK(set.matrices[i].imag().cwiseAbs().maxCoeff() == 0.0);
    CHECK(set.matrices[i].diagonal().cwiseAbs().maxCoeff() == 0.0);
  }
  for (int i = 6; i < 12; ++i) {
    CHECK(set.matrices[i].real().cwiseAbs().maxCoeff() == 0.0);
  }
  for (int i = 12; i < 15; ++i) {
    Eigen::MatrixXcd off = set.matrices[i];
    off.diagonal().setZero();
    CHECK(off.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("hermitian_traceless_orthogonal_for_many_dimensions") {
  for (int d : {2, 3, 4, 8}) {
    const GeneratorSet set = su_generators(d);
    REQUIRE(set.size() == static_cast<std::size_t>(d * d - 1));
    for (std::size_t a = 0; a < set.size(); ++a) {
      const auto& m = set.matrices[a];
      CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK(std::abs(m.trace()) <= 1e-14);
      for (std::size_t b = a; b < set.size(); ++b) {
        const Complex tr = (m * set.matrices[b]).trace();
        const double expected = (a == b) ? 2.0 : 0.0;
        CHECK(std::abs(tr - expected) <= 1e-13);
      }
    }
  }
}

TEST_CASE("with_identity_the_set_spans_hermitian_matrices") {
  auto rng = oracles::make_rng(21);
  std::normal_distribution<double> gauss;
  for (int d : {2, 3, 4}) {
    Eigen::MatrixXcd h(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) h(r, c) = Complex{gauss(rng), gauss(rng)};
    }
    h = ((h + h.adjoint()) / 2.0).eval();

    const GeneratorSet set = su_generators(d);
    Eigen::MatrixXcd rebuilt =
        (h.trace() / static_cast<double>(d)) * Eigen::MatrixXcd::Identity(d, d);
    for (const auto& lambda : set.matrices) {
      rebuilt += ((h * lambda).trace() / 2.0) * lambda;
    }
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("rejects_dimension_below_two") {
  CHECK_THROWS_AS(su_generators(1), ValidationError);
  CHECK_THROWS_AS(su_generators(0), ValidationError);
}

}  // TEST_SUITE
