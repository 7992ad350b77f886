#include "fgem/models.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace fgem {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kGaugeTol = 1e-12;

void gauge_fix_column(Eigen::MatrixXcd& m, Eigen::Index col) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex c = m(i, col);
    if (std::abs(c) > kGaugeTol) {
      m.col(col) *= std::conj(c) / std::abs(c);
      return;
    }
  }
}

}  // namespace

DimerParams::DimerParams(double t, double U) : hopping(t), repulsion(U) {
  if (!(t > 0.0)) throw ValidationError("dimer hopping must be positive");
  if (U < 0.0) throw ValidationError("dimer repulsion must be non-negative");
}

double DimerParams::alpha() const {
  const double x = interaction_ratio();
  return x + std::sqrt(1.0 + x * x);
}

DimerParams DimerParams::from_alpha(double alpha, double t) {
  if (alpha < 1.0) throw ValidationError("dimer alpha must be >= 1");
  // invert alpha = x + sqrt(1+x^2)
  const double x = (alpha * alpha - 1.0) / (2.0 * alpha);
  return DimerParams(t, 4.0 * t * x);
}

TrimerParams::TrimerParams(double t, double beta_) : hopping(t), beta(beta_) {
  if (!(t > 0.0)) throw ValidationError("trimer hopping must be positive");
  if (beta < 0.0) throw ValidationError("trimer beta must be non-negative");
}

HamiltonianMatrix::HamiltonianMatrix(SectorBasis basis_, Eigen::MatrixXcd matrix_)
    : basis(std::move(basis_)), matrix(std::move(matrix_)) {
  if (matrix.rows() != matrix.cols() ||
      matrix.rows() != static_cast<Eigen::Index>(basis.size())) {
    throw ValidationError("Hamiltonian dimension does not match sector basis");
  }
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw NumericError("Hamiltonian is not Hermitian");
  }
}

Eigen::MatrixXcd operator_matrix(
    const SectorBasis& basis,
    const std::function<StateVector(const StateVector&)>& apply) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const StateVector image =
        apply(StateVector::basis_state(basis.mode_count,
                                       basis.labels[static_cast<std::size_t>(col)]));
    m.col(col) = sector_coordinates(image, basis);
  }
  return m;
}

HamiltonianMatrix dimer_hamiltonian(const DimerParams& params) {
  const SectorBasis basis = enumerate_sector(4, 2);
  const double t = params.hopping;
  const double U = params.repulsion;
  auto apply = [t, U](const StateVector& v) {
    StateVector out(v.mode_count());
    // spin-conserving hops between the sites, both directions
    for (const auto& [i, j] : {std::pair{1, 3}, {3, 1}, {2, 4}, {4, 2}}) {
      out.accumulate(apply_hop(i, j, v), -t);
    }
    // on-site repulsion n_{A up} n_{A dn} + n_{B up} n_{B dn}
    out.accumulate(apply_hop(1, 1, apply_hop(2, 2, v)), U);
    out.accumulate(apply_hop(3, 3, apply_hop(4, 4, v)), U);
    return out;
  };
  return HamiltonianMatrix(basis, operator_matrix(basis, apply));
}

StateVector dimer_ground_state_analytic(const DimerParams& params) {
  const double a = params.alpha();
  const double c = -1.0 / std::sqrt(2.0 * (1.0 + a * a));
  StateVector v(4);
  v.set_coeff(0b1100, c);
  v.set_coeff(0b0011, c);
  v.set_coeff(0b1001, a * c);
  v.set_coeff(0b0110, -a * c);
  return v;
}

DimerCurves dimer_curves(double alpha) {
  if (alpha < 1.0) throw ValidationError("dimer alpha must be >= 1");
  const double a2 = alpha * alpha;
  DimerCurves curves;
  curves.four_partite =
      3.0 / (1.0 + a2) * std::sqrt(1.0 + 2.0 * a2 / 9.0 + a2 * a2) - 1.0;
  curves.inter_site =
      2.0 / (1.0 + a2) * std::sqrt(13.0 * a2 * a2 + 34.0 * a2 + 13.0) - 6.0;
  curves.von_neumann =
      (std::log2(2.0 * (1.0 + a2)) - a2 * std::log2(a2 / (2.0 * (1.0 + a2)))) /
      (1.0 + a2);
  return curves;
}

HamiltonianMatrix trimer_hamiltonian(const TrimerParams& params) {
  const SectorBasis basis = enumerate_sector(6, 3);
  const double t = params.hopping;
  const double U = params.repulsion();
  auto apply = [t, U](const StateVector& v) {
    StateVector out(v.mode_count());
    // periodic ring A->B->C->A, separately for up modes (1,3,5) and down (2,4,6);
    // the C-A bond exercises the nontrivial string signs.
    for (const auto& [i, j] :
         {std::pair{1, 3}, {3, 5}, {5, 1}, {2, 4}, {4, 6}, {6, 2}}) {
      out.accumulate(apply_hop(i, j, v), -t);
      out.accumulate(apply_hop(j, i, v), -t);
    }
    for (int site = 0; site < 3; ++site) {
      const int up = 2 * site + 1;
      const int dn = 2 * site + 2;
      out.accumulate(apply_hop(up, up, apply_hop(dn, dn, v)), U);
    }
    return out;
  };
  return HamiltonianMatrix(basis, operator_matrix(basis, apply));
}

EigenSolution diagonalize(const HamiltonianMatrix& h, double degeneracy_rtol) {
  if ((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw NumericError("diagonalize needs a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
  EigenSolution sol;
  sol.eigenvalues = solver.eigenvalues();
  sol.eigenvectors = solver.eigenvectors();
  for (Eigen::Index col = 0; col < sol.eigenvectors.cols(); ++col) {
    gauge_fix_column(sol.eigenvectors, col);
  }

  const Eigen::Index n = sol.eigenvalues.size();
  const double range = sol.eigenvalues[n - 1] - sol.eigenvalues[0];
  const double tol = degeneracy_rtol * std::max(range, 1e-12);
  Eigen::Index degeneracy = 1;
  while (degeneracy < n &&
         sol.eigenvalues[degeneracy] - sol.eigenvalues[0] <= tol) {
    ++degeneracy;
  }
  sol.ground_degeneracy = static_cast<int>(degeneracy);

  // Canonical representatives: Gram-Schmidt of basis-vector projections onto
  // the ground eigenspace, in ascending label order. Depends only on the
  // projector, not on the solver's choice of degenerate columns.
  const Eigen::MatrixXcd ground = sol.eigenvectors.leftCols(degeneracy);
  const Eigen::MatrixXcd projector = ground * ground.adjoint();
  sol.ground_multiplet.resize(n, degeneracy);
  Eigen::Index found = 0;
  for (Eigen::Index j = 0; j < n && found < degeneracy; ++j) {
    Eigen::VectorXcd w = projector.col(j);
    for (Eigen::Index r = 0; r < found; ++r) {
      w -= sol.ground_multiplet.col(r).dot(w) * sol.ground_multiplet.col(r);
    }
    if (w.norm() > 1e-8) {
      sol.ground_multiplet.col(found) = w / w.norm();
      gauge_fix_column(sol.ground_multiplet, found);
      ++found;
    }
  }
  if (found != degeneracy) {
    throw NumericError("could not span the ground eigenspace from basis projections");
  }
  return sol;
}

StateVector apply_spin_z(const StateVector& v) {
  if (v.mode_count() % 2 != 0) {
    throw ValidationError("spin operators need an even mode count");
  }
  StateVector out(v.mode_count());
  for (int site = 0; site < v.mode_count() / 2; ++site) {
    out.accumulate(apply_hop(2 * site + 1, 2 * site + 1, v), 0.5);
    out.accumulate(apply_hop(2 * site + 2, 2 * site + 2, v), -0.5);
  }
  return out;
}

namespace {

StateVector apply_spin_raise(const StateVector& v) {
  StateVector out(v.mode_count());
  for (int site = 0; site < v.mode_count() / 2; ++site) {
    out.accumulate(apply_hop(2 * site + 1, 2 * site + 2, v));
  }
  return out;
}

StateVector apply_spin_lower(const StateVector& v) {
  StateVector out(v.mode_count());
  for (int site = 0; site < v.mode_count() / 2; ++site) {
    out.accumulate(apply_hop(2 * site + 2, 2 * site + 1, v));
  }
  return out;
}

}  // namespace

StateVector apply_spin_squared(const StateVector& v) {
  if (v.mode_count() % 2 != 0) {
    throw ValidationError("spin operators need an even mode count");
  }
  // S^2 = S_z^2 + (S+ S- + S- S+) / 2
  StateVector out = apply_spin_z(apply_spin_z(v));
  out.accumulate(apply_spin_lower(apply_spin_raise(v)), 0.5);
  out.accumulate(apply_spin_raise(apply_spin_lower(v)), 0.5);
  return out;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> total_spin_ops(const SectorBasis& basis) {
  if (basis.mode_count % 2 != 0) {
    throw ValidationError("spin operators need an even mode count");
  }
  return {operator_matrix(basis, [](const StateVector& v) { return apply_spin_squared(v); }),
          operator_matrix(basis, [](const StateVector& v) { return apply_spin_z(v); })};
}

double spin_z_of_label(std::uint64_t label, int mode_count) {
  if (mode_count % 2 != 0) {
    throw ValidationError("spin operators need an even mode count");
  }
  double sz = 0.0;
  for (int site = 0; site < mode_count / 2; ++site) {
    const auto up = (label >> bit_position(2 * site + 1, mode_count)) & 1;
    const auto dn = (label >> bit_position(2 * site + 2, mode_count)) & 1;
    sz += 0.5 * (static_cast<double>(up) - static_cast<double>(dn));
  }
  return sz;
}

std::vector<std::size_t> spin_z_block(const SectorBasis& basis, double sz) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (std::abs(spin_z_of_label(basis.labels[i], basis.mode_count) - sz) < 1e-9) {
      idx.push_back(i);
    }
  }
  return idx;
}

Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& idx) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(idx.size()),
                       static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          m(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
    }
  }
  return out;
}

}  // namespace fgem
