#include <doctest.h>

#include <cmath>

#include "fgem/measure.hpp"
#include "fgem/models.hpp"
#include "oracles.hpp"

using namespace fgem;

TEST_SUITE("models") {

TEST_CASE("dimer_alpha_parameterization") {
  CHECK(DimerParams(1.0, 0.0).alpha() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(DimerParams(1.0, 4.0).alpha() == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  // monotone in U at fixed t
  double prev = 1.0;
  for (double u : {0.5, 1.0, 2.0, 8.0, 32.0}) {
    const double a = DimerParams(1.0, u).alpha();
    CHECK(a > prev);
    prev = a;
  }
  // from_alpha inverts alpha()
  for (double a : {1.0, 1.7, 4.2, 50.0}) {
    CHECK(DimerParams::from_alpha(a, 2.0).alpha() == doctest::Approx(a).epsilon(1e-12));
  }
  CHECK_THROWS_AS(DimerParams(0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(DimerParams(1.0, -1.0), ValidationError);
}

TEST_CASE("dimer_hamiltonian_is_real_symmetric") {
  const HamiltonianMatrix h = dimer_hamiltonian(DimerParams(1.0, 3.0));
  CHECK(h.matrix.imag().cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("dimer_ground_energy") {
  const EigenSolution at_zero = diagonalize(dimer_hamiltonian(DimerParams(1.5, 0.0)));
  CHECK(at_zero.eigenvalues[0] == doctest::Approx(-3.0).epsilon(1e-12));

  for (const auto& [t, u] : {std::pair{1.0, 2.0}, {0.7, 5.0}, {2.0, 0.5}}) {
    const EigenSolution sol = diagonalize(dimer_hamiltonian(DimerParams(t, u)));
    const double expected = u / 2.0 - std::sqrt(u * u / 4.0 + 4.0 * t * t);
    CHECK(sol.eigenvalues[0] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("analytic_ground_state_matches_the_eigensolver") {
  for (double alpha : {1.0, 2.0, 10.0}) {
    const DimerParams params = DimerParams::from_alpha(alpha);
    const HamiltonianMatrix h = dimer_hamiltonian(params);
    const EigenSolution sol = diagonalize(h);
    const StateVector analytic = dimer_ground_state_analytic(params);
    const Eigen::VectorXcd numeric = sol.ground_multiplet.col(0);
    const Eigen::VectorXcd coords = sector_coordinates(analytic, h.basis);
    CHECK(std::abs(numeric.dot(coords)) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("analytic_ground_state_is_an_eigenvector") {
  for (double alpha : {1.0, 1.5, 2.0, 5.0, 10.0}) {
    const DimerParams params = DimerParams::from_alpha(alpha);
    const HamiltonianMatrix h = dimer_hamiltonian(params);
    const Eigen::VectorXcd coords =
        sector_coordinates(dimer_ground_state_analytic(params), h.basis);
    const double u = params.repulsion;
    const double t = params.hopping;
    const double energy = u / 2.0 - std::sqrt(u * u / 4.0 + 4.0 * t * t);
    CHECK((h.matrix * coords - energy * coords).norm() <= 1e-9);
  }
}

TEST_CASE("large_alpha_limit_is_the_spin_singlet_direction") {
  const StateVector v = dimer_ground_state_analytic(DimerParams::from_alpha(1e8));
  StateVector singlet(4);
  singlet.set_coeff(0b1001, 1.0 / std::sqrt(2.0));
  singlet.set_coeff(0b0110, -1.0 / std::sqrt(2.0));
  CHECK(std::abs(inner_product(singlet, v)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("dimer_curves_spot_values_and_limits") {
  const DimerCurves at_one = dimer_curves(1.0);
  CHECK(at_one.four_partite == doctest::Approx(std::sqrt(5.0) - 1.0).epsilon(1e-14));
  CHECK(at_one.inter_site == doctest::Approx(std::sqrt(60.0) - 6.0).epsilon(1e-14));
  CHECK(at_one.von_neumann == doctest::Approx(2.0).epsilon(1e-14));

  const DimerCurves at_infinity = dimer_curves(1e6);
  CHECK(std::abs(at_infinity.four_partite - 2.0) <= 1e-9);
  CHECK(std::abs(at_infinity.inter_site - (2.0 * std::sqrt(13.0) - 6.0)) <= 1e-9);
  CHECK(std::abs(at_infinity.von_neumann - 1.0) <= 1e-9);
}

TEST_CASE("numeric_measures_match_dimer_curves") {
  const Partition four_singles(4, {{1}, {2}, {3}, {4}});
  const Partition site(4, {{1, 2}, {3, 4}});
  for (double alpha : {1.0, 1.5, 2.0, 5.0, 10.0, 100.0}) {
    const StateVector v = dimer_ground_state_analytic(DimerParams::from_alpha(alpha));
    const DimerCurves curves = dimer_curves(alpha);
    CHECK(std::abs(geometric_entanglement(v, four_singles).entanglement -
                   curves.four_partite) <= 1e-10);
    CHECK(std::abs(geometric_entanglement(v, site).entanglement - curves.inter_site) <=
          1e-10);
    CHECK(std::abs(von_neumann_entropy(v, site) - curves.von_neumann) <= 1e-10);
  }
}

TEST_CASE("trimer_ground_energy_at_beta_zero") {
  const EigenSolution sol = diagonalize(trimer_hamiltonian(TrimerParams(1.0, 0.0)));
  CHECK(sol.eigenvalues[0] == doctest::Approx(-3.0).epsilon(1e-12));
  const EigenSolution scaled = diagonalize(trimer_hamiltonian(TrimerParams(0.5, 0.0)));
  CHECK(scaled.eigenvalues[0] == doctest::Approx(-1.5).epsilon(1e-12));
}

TEST_CASE("trimer_commutes_with_total_spin") {
  for (double beta : {0.0, 1.0, 5.0, 20.0}) {
    const HamiltonianMatrix h = trimer_hamiltonian(TrimerParams(1.0, beta));
    const auto [s2, sz] = total_spin_ops(h.basis);
    CHECK((h.matrix * s2 - s2 * h.matrix).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((h.matrix * sz - sz * h.matrix).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("trimer_ground_degeneracy_two_per_spin_block") {
  for (double beta : {0.0, 1.0, 5.0, 20.0}) {
    const HamiltonianMatrix h = trimer_hamiltonian(TrimerParams(1.0, beta));
    for (double sz : {0.5, -0.5}) {
      const auto idx = spin_z_block(h.basis, sz);
      CHECK(idx.size() == 9);
      const Eigen::MatrixXcd block = submatrix(h.matrix, idx);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
      const double range =
          solver.eigenvalues()[block.rows() - 1] - solver.eigenvalues()[0];
      int degeneracy = 1;
      while (degeneracy < block.rows() &&
             solver.eigenvalues()[degeneracy] - solver.eigenvalues()[0] <=
                 1e-8 * range) {
        ++degeneracy;
      }
      CHECK(degeneracy == 2);
    }
  }
}

TEST_CASE("trimer_ground_states_have_spin_one_half") {
  const HamiltonianMatrix h = trimer_hamiltonian(TrimerParams(1.0, 2.0));
  const EigenSolution sol = diagonalize(h);
  CHECK(sol.ground_degeneracy == 4);  // two spin-z sectors x reflection doublet
  const auto [s2, sz] = total_spin_ops(h.basis);
  for (int r = 0; r < sol.ground_degeneracy; ++r) {
    const Eigen::VectorXcd v = sol.ground_multiplet.col(r);
    CHECK(std::abs(v.dot(s2 * v) - 0.75) <= 1e-9);
  }
}

TEST_CASE("degenerate_ground_representatives_share_entanglement") {
  const Partition six_singles(6, {{1}, {2}, {3}, {4}, {5}, {6}});
  const Partition sites(6, {{1, 2}, {3, 4}, {5, 6}});
  const HamiltonianMatrix h = trimer_hamiltonian(TrimerParams(1.0, 2.0));
  const EigenSolution sol = diagonalize(h);
  std::vector<double> six, three;
  for (int r = 0; r < sol.ground_degeneracy; ++r) {
    const StateVector v = state_from_coordinates(h.basis, sol.ground_multiplet.col(r));
    six.push_back(geometric_entanglement(v, six_singles).entanglement);
    three.push_back(geometric_entanglement(v, sites).entanglement);
  }
  for (std::size_t r = 1; r < six.size(); ++r) {
    CHECK(std::abs(six[r] - six[0]) <= 1e-9);
    CHECK(std::abs(three[r] - three[0]) <= 1e-9);
  }
}

TEST_CASE("total_spin_examples") {
  const SectorBasis four_two = enumerate_sector(4, 2);
  const auto [s2_4, sz_4] = total_spin_ops(four_two);
  const Eigen::VectorXcd doublon =
      sector_coordinates(StateVector::basis_state(4, 0b1100), four_two);
  CHECK(std::abs(doublon.dot(sz_4 * doublon)) <= 1e-14);

  const SectorBasis six_three = enumerate_sector(6, 3);
  const auto [s2_6, sz_6] = total_spin_ops(six_three);
  const Eigen::VectorXcd polarized =
      sector_coordinates(StateVector::basis_state(6, 0b101010), six_three);
  CHECK(polarized.dot(sz_6 * polarized).real() == doctest::Approx(1.5).epsilon(1e-14));

  CHECK_THROWS_AS(total_spin_ops(enumerate_sector(3, 1)), ValidationError);
}

TEST_CASE("diagonalize_sorts_and_gauge_fixes") {
  const SectorBasis basis = enumerate_sector(4, 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m.diagonal() << 3.0, 1.0, 2.0, 5.0;
  const EigenSolution sol = diagonalize(HamiltonianMatrix(basis, m));
  CHECK(sol.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(sol.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(sol.eigenvalues[2] == doctest::Approx(3.0));
  CHECK(sol.eigenvalues[3] == doctest::Approx(5.0));
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      const Complex a = sol.eigenvectors(r, c);
      if (std::abs(a) > 1e-12) {
        CHECK(a.imag() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(a.real() > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("diagonalize_rejects_non_hermitian") {
  const SectorBasis basis = enumerate_sector(2, 1);
  Eigen::MatrixXcd m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(HamiltonianMatrix(basis, m), NumericError);
}

}  // TEST_SUITE
