#include "fgem/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fgem {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t OccupationState::label() const {
  std::uint64_t k = 0;
  for (int b : bits) k = (k << 1) | static_cast<std::uint64_t>(b & 1);
  return k;
}

int OccupationState::particle_number() const {
  int n = 0;
  for (int b : bits) n += b;
  return n;
}

std::string OccupationState::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

OccupationState state_from_label(std::uint64_t label, int mode_count) {
  if (mode_count < 1 || mode_count > StateVector::kMaxModeCount) {
    throw ValidationError("mode count must be in [1, 62]");
  }
  if (label >> mode_count) {
    throw ValidationError("label out of range for " + std::to_string(mode_count) + " modes");
  }
  OccupationState s;
  s.mode_count = mode_count;
  s.bits.resize(mode_count);
  for (int mode = 1; mode <= mode_count; ++mode) {
    s.bits[mode - 1] = static_cast<int>((label >> bit_position(mode, mode_count)) & 1);
  }
  return s;
}

std::optional<std::size_t> SectorBasis::index_of(std::uint64_t label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

SectorBasis enumerate_sector(int mode_count, int particle_number) {
  if (mode_count < 1 || mode_count > StateVector::kMaxModeCount) {
    throw ValidationError("mode count must be in [1, 62]");
  }
  if (particle_number < 0 || particle_number > mode_count) {
    throw ValidationError("particle number must be in [0, mode count]");
  }
  SectorBasis basis;
  basis.mode_count = mode_count;
  basis.particle_number = particle_number;
  basis.labels.reserve(binomial(mode_count, particle_number));
  if (particle_number == 0) {
    basis.labels.push_back(0);
    return basis;
  }
  const std::uint64_t limit = std::uint64_t{1} << mode_count;
  std::uint64_t x = (std::uint64_t{1} << particle_number) - 1;
  while (x < limit) {
    basis.labels.push_back(x);
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r >= limit || r < x) break;
    x = (((x ^ r) >> 2) / c) | r;
  }
  return basis;
}

StateVector::StateVector(int mode_count)
    : mode_count_(mode_count), dense_storage_(mode_count <= kDenseModeLimit) {
  if (mode_count < 1 || mode_count > kMaxModeCount) {
    throw ValidationError("mode count must be in [1, 62]");
  }
  if (dense_storage_) dense_.assign(dim(), Complex{0.0, 0.0});
}

StateVector StateVector::basis_state(int mode_count, std::uint64_t label) {
  StateVector v(mode_count);
  v.set_coeff(label, 1.0);
  return v;
}

void StateVector::check_label(std::uint64_t label) const {
  if (label >> mode_count_) throw ValidationError("label out of range");
}

Complex StateVector::coeff(std::uint64_t label) const {
  check_label(label);
  if (dense_storage_) return dense_[label];
  auto it = sparse_.find(label);
  return it == sparse_.end() ? Complex{0.0, 0.0} : it->second;
}

void StateVector::set_coeff(std::uint64_t label, Complex value) {
  check_label(label);
  if (dense_storage_) {
    dense_[label] = value;
  } else if (value == 0.0) {
    sparse_.erase(label);
  } else {
    sparse_[label] = value;
  }
}

void StateVector::add_coeff(std::uint64_t label, Complex value) {
  check_label(label);
  if (dense_storage_) {
    dense_[label] += value;
  } else {
    auto [it, inserted] = sparse_.try_emplace(label, value);
    if (!inserted) it->second += value;
  }
}

double StateVector::norm() const {
  double sq = 0.0;
  for_each_nonzero([&](std::uint64_t, Complex a) { sq += std::norm(a); });
  return std::sqrt(sq);
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

std::optional<int> StateVector::particle_sector() const {
  std::optional<int> sector;
  bool mixed = false;
  for_each_nonzero([&](std::uint64_t k, Complex) {
    const int n = std::popcount(k);
    if (!sector) {
      sector = n;
    } else if (*sector != n) {
      mixed = true;
    }
  });
  if (mixed) return std::nullopt;
  return sector;
}

void StateVector::accumulate(const StateVector& other, Complex scale) {
  if (other.mode_count_ != mode_count_) {
    throw ValidationError("mode count mismatch in StateVector::accumulate");
  }
  other.for_each_nonzero([&](std::uint64_t k, Complex a) { add_coeff(k, scale * a); });
}

StateVector StateVector::scaled(Complex scale) const {
  StateVector out(mode_count_);
  for_each_nonzero([&](std::uint64_t k, Complex a) { out.set_coeff(k, scale * a); });
  return out;
}

StateVector apply_ladder(const LadderOp& op, const StateVector& v) {
  if (op.mode < 1 || op.mode > v.mode_count()) {
    throw ValidationError("ladder operator mode out of range");
  }
  const int b = bit_position(op.mode, v.mode_count());
  const std::uint64_t bit = std::uint64_t{1} << b;
  const std::uint64_t string_mask = bit - 1;  // modes j > op.mode sit below bit b
  StateVector out(v.mode_count());
  v.for_each_nonzero([&](std::uint64_t k, Complex a) {
    const double phase = (std::popcount(k & string_mask) & 1) ? -1.0 : 1.0;
    if (op.kind == LadderKind::kAnnihilate) {
      if (k & bit) out.add_coeff(k ^ bit, phase * a);
    } else {
      if (!(k & bit)) out.add_coeff(k | bit, phase * a);
    }
  });
  return out;
}

StateVector apply_annihilate(int mode, const StateVector& v) {
  return apply_ladder({mode, LadderKind::kAnnihilate}, v);
}

StateVector apply_create(int mode, const StateVector& v) {
  return apply_ladder({mode, LadderKind::kCreate}, v);
}

StateVector apply_hop(int i, int j, const StateVector& v) {
  return apply_create(i, apply_annihilate(j, v));
}

int parity(const StateVector& v) {
  std::optional<int> par;
  bool mixed = false;
  v.for_each_nonzero([&](std::uint64_t k, Complex) {
    const int p = std::popcount(k) & 1;
    if (!par) {
      par = p;
    } else if (*par != p) {
      mixed = true;
    }
  });
  if (!par) throw ValidationError("parity of the zero vector is undefined");
  if (mixed) throw ValidationError("not a parity eigenstate");
  return *par ? -1 : 1;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.mode_count() != b.mode_count()) {
    throw ValidationError("mode count mismatch in inner_product");
  }
  Complex acc{0.0, 0.0};
  a.for_each_nonzero(
      [&](std::uint64_t k, Complex av) { acc += std::conj(av) * b.coeff(k); });
  return acc;
}

Eigen::VectorXcd sector_coordinates(const StateVector& v, const SectorBasis& basis) {
  if (v.mode_count() != basis.mode_count) {
    throw ValidationError("mode count mismatch in sector_coordinates");
  }
  Eigen::VectorXcd coords = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  v.for_each_nonzero([&](std::uint64_t k, Complex a) {
    const auto idx = basis.index_of(k);
    if (!idx) throw ValidationError("state has support outside the sector");
    coords[static_cast<Eigen::Index>(*idx)] = a;
  });
  return coords;
}

StateVector state_from_coordinates(const SectorBasis& basis,
                                   const Eigen::VectorXcd& coords) {
  if (coords.size() != static_cast<Eigen::Index>(basis.size())) {
    throw ValidationError("coordinate count does not match sector dimension");
  }
  StateVector v(basis.mode_count);
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0.0) v.set_coeff(basis.labels[static_cast<std::size_t>(i)], coords[i]);
  }
  return v;
}

}  // namespace fgem
