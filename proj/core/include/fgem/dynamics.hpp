#pragma once

#include "fgem/fock.hpp"
#include "fgem/models.hpp"
#include "fgem/partition.hpp"

namespace fgem {

/// Couplings of the four-mode perturbation Hamiltonian
///   H = f (a1+ a4 + a4+ a1) + q n1 n2 + G n1 + g n3 + eta (a1+ a2 + a2+ a1),
/// covering inter-site hopping, on-site density-density, single-mode
/// potentials and intra-site hopping.
struct PerturbationParams {
  double inter_site_hop = 0.0;    // f
  double density_density = 0.0;   // q
  double mode1_potential = 0.0;   // Gamma
  double mode3_potential = 0.0;   // gamma
  double intra_site_hop = 0.0;    // eta
};

/// Parameters of the four-mode two-fermion probe state; constrained to
/// alpha^2 + beta^2 = 2 within 1e-12.
struct TestStateParams {
  double alpha = 1.0;
  double beta = 1.0;

  TestStateParams(double alpha, double beta);
};

/// (i a|1100> + |1001> + |0110> + |0011> + b|0101> + |1010>) / sqrt(6)
StateVector test_state(const TestStateParams& p);

HamiltonianMatrix perturbation_hamiltonian(const PerturbationParams& p);

/// |psi'> = |psi> - i eps H |psi>, renormalized. The truncation error is
/// O(eps^2); use evolve() when that matters.
StateVector first_order_evolve(const StateVector& v, const HamiltonianMatrix& h,
                               double epsilon);

/// Exact unitary evolution exp(-i eps H) via the sector eigendecomposition.
StateVector evolve(const StateVector& v, const HamiltonianMatrix& h, double epsilon);

/// Central-difference dE/deps at eps = 0, using exact evolution so that only
/// the O(eps_step^2) difference error remains.
double entanglement_derivative(const StateVector& v, const HamiltonianMatrix& h,
                               const Partition& p, double eps_step = 1e-4);

/// Closed-form first-order expansions of the probe state's entanglement
/// under the perturbation, kept as independent cross-checks of the numeric
/// path. The site expansion's value and first-order coefficient agree with
/// the numeric route. The four-partite expansion is reproduced exactly as
/// published, whose radicand omits an alpha^4 term relative to the directly
/// computed tensor norm, so its constant term is offset from the numeric
/// value; the tests pin down both numbers.
double four_partite_expansion(const TestStateParams& s, const PerturbationParams& p,
                              double epsilon);
double site_expansion(const TestStateParams& s, const PerturbationParams& p,
                      double epsilon);

}  // namespace fgem
