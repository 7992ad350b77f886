#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fgem/errors.hpp"

namespace fgem {

using Complex = std::complex<double>;

/// Modes are numbered 1..2L and mode 1 is the most significant bit of the
/// integer label, so |n_1 n_2 ... n_{2L}> carries label sum_i n_i 2^{2L-i}.
constexpr int bit_position(int mode, int mode_count) { return mode_count - mode; }

std::uint64_t binomial(int n, int k);

/// Occupation-number basis state over 2L modes.
struct OccupationState {
  int mode_count = 0;
  std::vector<int> bits;  // n_1 .. n_{2L}, each 0 or 1

  std::uint64_t label() const;
  int particle_number() const;
  std::string to_string() const;  // e.g. "0110"
};

/// Decode an integer label into occupation bits; inverse of
/// OccupationState::label().
OccupationState state_from_label(std::uint64_t label, int mode_count);

/// The fixed-particle-number subspace basis: all binomial(2L, N) occupation
/// states with N particles, ascending by label.
struct SectorBasis {
  int mode_count = 0;
  int particle_number = 0;
  std::vector<std::uint64_t> labels;

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> index_of(std::uint64_t label) const;
};

SectorBasis enumerate_sector(int mode_count, int particle_number);

/// Complex amplitudes over the 2^{2L} occupation labels. Storage is a dense
/// array up to kDenseModeLimit modes and a label->amplitude map above, so
/// sparse states on wide lattices stay representable.
class StateVector {
 public:
  static constexpr int kDenseModeLimit = 12;
  static constexpr int kMaxModeCount = 62;

  explicit StateVector(int mode_count);
  static StateVector basis_state(int mode_count, std::uint64_t label);

  int mode_count() const { return mode_count_; }
  std::uint64_t dim() const { return std::uint64_t{1} << mode_count_; }

  Complex coeff(std::uint64_t label) const;
  void set_coeff(std::uint64_t label, Complex value);
  void add_coeff(std::uint64_t label, Complex value);

  /// Visit nonzero (label, amplitude) pairs in ascending label order.
  template <typename Fn>
  void for_each_nonzero(Fn&& fn) const {
    if (dense_storage_) {
      for (std::uint64_t k = 0; k < dense_.size(); ++k) {
        if (dense_[k] != 0.0) fn(k, dense_[k]);
      }
    } else {
      for (const auto& [k, a] : sparse_) {
        if (a != 0.0) fn(k, a);
      }
    }
  }

  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  StateVector normalized() const;  // throws ValidationError on the zero vector

  /// Particle number N when every support label has exactly N set bits.
  std::optional<int> particle_sector() const;

  /// this += scale * other
  void accumulate(const StateVector& other, Complex scale = 1.0);
  StateVector scaled(Complex scale) const;

 private:
  void check_label(std::uint64_t label) const;

  int mode_count_;
  bool dense_storage_;
  std::vector<Complex> dense_;
  std::map<std::uint64_t, Complex> sparse_;
};

enum class LadderKind { kAnnihilate, kCreate };

struct LadderOp {
  int mode = 1;  // 1-based
  LadderKind kind = LadderKind::kAnnihilate;
};

/// Apply a (a^dag) at the op's mode with the string phase
/// (-1)^{sum_{j>mode} n_j}; components killed by the operator drop out.
/// The result is generally unnormalized.
StateVector apply_ladder(const LadderOp& op, const StateVector& v);
StateVector apply_annihilate(int mode, const StateVector& v);
StateVector apply_create(int mode, const StateVector& v);

/// a_i^dag a_j; i == j is the number operator for mode i.
StateVector apply_hop(int i, int j, const StateVector& v);

/// (-1)^N for a state supported on a single particle-number parity.
/// Throws ValidationError when the support mixes parities.
int parity(const StateVector& v);

Complex inner_product(const StateVector& a, const StateVector& b);

/// Coefficients of v over the sector basis, in basis order. Throws
/// ValidationError if v has support outside the sector.
Eigen::VectorXcd sector_coordinates(const StateVector& v, const SectorBasis& basis);
StateVector state_from_coordinates(const SectorBasis& basis,
                                   const Eigen::VectorXcd& coords);

}  // namespace fgem
