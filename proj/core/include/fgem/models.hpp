#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fgem/fock.hpp"

namespace fgem {

/// Two-site Hubbard model at half filling. Mode order (A-up A-dn B-up B-dn).
struct DimerParams {
  double hopping = 1.0;    // t > 0
  double repulsion = 0.0;  // U >= 0

  DimerParams(double t, double U);
  double interaction_ratio() const { return repulsion / (4.0 * hopping); }
  /// alpha(x) = x + sqrt(1 + x^2) with x = U/(4t); alpha >= 1.
  double alpha() const;
  static DimerParams from_alpha(double alpha, double t = 1.0);
};

/// Three-site periodic Hubbard model. Mode order (A-up A-dn B-up B-dn C-up C-dn).
struct TrimerParams {
  double hopping = 1.0;  // t > 0
  double beta = 0.0;     // U / t >= 0

  TrimerParams(double t, double beta);
  double repulsion() const { return beta * hopping; }
};

/// Hermitian operator on a fixed-N sector, stored over the sector basis.
struct HamiltonianMatrix {
  SectorBasis basis;
  Eigen::MatrixXcd matrix;

  HamiltonianMatrix(SectorBasis basis, Eigen::MatrixXcd matrix);
};

/// Assemble the matrix of a sector-preserving linear operator by applying it
/// to every basis state. Throws if the operator leaves the sector.
Eigen::MatrixXcd operator_matrix(
    const SectorBasis& basis,
    const std::function<StateVector(const StateVector&)>& apply);

HamiltonianMatrix dimer_hamiltonian(const DimerParams& params);

/// Closed-form normalized ground state
/// -(|1100> + |0011> + a|1001> - a|0110>) / sqrt(2(1+a^2)), a = alpha(U/4t).
StateVector dimer_ground_state_analytic(const DimerParams& params);

/// The three dimer ground-state entanglement curves as functions of alpha:
/// the four-partite measure, the inter-site (site bipartition) measure, and
/// the site-bipartition von Neumann entropy.
struct DimerCurves {
  double four_partite = 0.0;
  double inter_site = 0.0;
  double von_neumann = 0.0;
};
DimerCurves dimer_curves(double alpha);

HamiltonianMatrix trimer_hamiltonian(const TrimerParams& params);

/// Full spectrum of a sector Hamiltonian. Eigenvalues ascend; eigenvector
/// columns are gauge-fixed (first nonzero amplitude real positive).
/// ground_multiplet holds a canonical orthonormal basis of the ground
/// eigenspace obtained by projecting sector basis vectors of ascending label
/// onto it, so the representatives are solver-independent and deterministic;
/// column 0 is the representative with the lowest-label leading support.
struct EigenSolution {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  int ground_degeneracy = 1;
  Eigen::MatrixXcd ground_multiplet;
};

EigenSolution diagonalize(const HamiltonianMatrix& h, double degeneracy_rtol = 1e-8);

/// (S^2, S_z) matrices on the sector, assembled from ladder operators with
/// the (site, spin) mode pairing (2j-1, 2j). Throws on odd mode counts.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> total_spin_ops(const SectorBasis& basis);

StateVector apply_spin_z(const StateVector& v);
StateVector apply_spin_squared(const StateVector& v);

/// S_z eigenvalue of an occupation basis state under the (site, spin) pairing.
double spin_z_of_label(std::uint64_t label, int mode_count);

/// Positions (within the sector basis) of the basis states with the given
/// S_z eigenvalue.
std::vector<std::size_t> spin_z_block(const SectorBasis& basis, double sz);

Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& idx);

}  // namespace fgem
