#include "fgem/dynamics.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "fgem/measure.hpp"

namespace fgem {

TestStateParams::TestStateParams(double alpha_, double beta_)
    : alpha(alpha_), beta(beta_) {
  if (std::abs(alpha * alpha + beta * beta - 2.0) > 1e-12) {
    throw ValidationError("test state parameters must satisfy alpha^2 + beta^2 = 2");
  }
}

StateVector test_state(const TestStateParams& p) {
  const double c = 1.0 / std::sqrt(6.0);
  StateVector v(4);
  v.set_coeff(0b1100, Complex{0.0, p.alpha * c});
  v.set_coeff(0b1001, c);
  v.set_coeff(0b0110, c);
  v.set_coeff(0b0011, c);
  v.set_coeff(0b0101, p.beta * c);
  v.set_coeff(0b1010, c);
  return v;
}

HamiltonianMatrix perturbation_hamiltonian(const PerturbationParams& p) {
  const SectorBasis basis = enumerate_sector(4, 2);
  auto apply = [p](const StateVector& v) {
    StateVector out(v.mode_count());
    out.accumulate(apply_hop(1, 4, v), p.inter_site_hop);
    out.accumulate(apply_hop(4, 1, v), p.inter_site_hop);
    out.accumulate(apply_hop(1, 1, apply_hop(2, 2, v)), p.density_density);
    out.accumulate(apply_hop(1, 1, v), p.mode1_potential);
    out.accumulate(apply_hop(3, 3, v), p.mode3_potential);
    out.accumulate(apply_hop(1, 2, v), p.intra_site_hop);
    out.accumulate(apply_hop(2, 1, v), p.intra_site_hop);
    return out;
  };
  return HamiltonianMatrix(basis, operator_matrix(basis, apply));
}

StateVector first_order_evolve(const StateVector& v, const HamiltonianMatrix& h,
                               double epsilon) {
  if (epsilon < 0.0) throw ValidationError("epsilon must be non-negative");
  const Eigen::VectorXcd coords = sector_coordinates(v, h.basis);
  const Eigen::VectorXcd evolved =
      coords - Complex{0.0, epsilon} * (h.matrix * coords);
  const double n = evolved.norm();
  if (n == 0.0) throw NumericError("first-order evolution annihilated the state");
  return state_from_coordinates(h.basis, evolved / n);
}

StateVector evolve(const StateVector& v, const HamiltonianMatrix& h, double epsilon) {
  const Eigen::VectorXcd coords = sector_coordinates(v, h.basis);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
  const Eigen::VectorXcd phases =
      (Complex{0.0, -epsilon} * solver.eigenvalues().array().cast<Complex>())
          .exp()
          .matrix();
  const Eigen::VectorXcd evolved =
      solver.eigenvectors() *
      (phases.array() * (solver.eigenvectors().adjoint() * coords).array()).matrix();
  return state_from_coordinates(h.basis, evolved);
}

double entanglement_derivative(const StateVector& v, const HamiltonianMatrix& h,
                               const Partition& p, double eps_step) {
  if (!(eps_step > 0.0)) throw ValidationError("eps_step must be positive");
  const double plus = geometric_entanglement(evolve(v, h, eps_step), p).entanglement;
  const double minus = geometric_entanglement(evolve(v, h, -eps_step), p).entanglement;
  return (plus - minus) / (2.0 * eps_step);
}

double four_partite_expansion(const TestStateParams& s, const PerturbationParams& p,
                              double epsilon) {
  const double a = s.alpha, b = s.beta;
  const double radicand = 88.0 + 64.0 * a * a + 32.0 * b + 64.0 * b * b +
                          10.0 * a * a * b * b + b * b * b * b;
  const double root = std::sqrt(radicand);
  const double numerator =
      4.0 * (4.0 * p.inter_site_hop * a - 2.0 * p.density_density * a * (1.0 + b) +
             p.inter_site_hop * a * b * (a * a - b * b) +
             4.0 * a * p.intra_site_hop * (1.0 + b));
  return (-6.0 + root) / 6.0 - numerator * epsilon / (-6.0 + root);
}

double site_expansion(const TestStateParams& s, const PerturbationParams& p,
                      double epsilon) {
  const double a = s.alpha, b = s.beta;
  const double radicand = 208.0 + 136.0 * a * a + 9.0 * a * a * a * a - 32.0 * b +
                          104.0 * b * b + 34.0 * a * a * b * b + 9.0 * b * b * b * b;
  const double root = std::sqrt(radicand);
  const double numerator =
      16.0 * (-p.inter_site_hop * a + p.inter_site_hop * a * b * (a * a - b * b - 2.0));
  return (-18.0 + root) / 3.0 - numerator * epsilon / (3.0 * root);
}

}  // namespace fgem
