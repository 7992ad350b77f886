#pragma once

#include <stdexcept>

namespace fgem {

/// Thrown when an input violates a documented precondition (bad partition,
/// out-of-range mode index, unnormalized state, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal numerical consistency check fails (non-Hermitian
/// matrix, imaginary residue on a real expectation value, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgem
