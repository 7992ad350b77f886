#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fgem/fock.hpp"

// State-file and report serialization for the command-line tool. The file
// format is JSON:
//   {"modes": M, "amplitudes": [{"basis": "0110", "re": x, "im": y}, ...]}
// with the leftmost bitstring character denoting mode 1. Duplicate basis
// entries accumulate.
namespace fgem::cli {

/// Mapped to exit code 4 by the driver.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode {
  kOk = 0,
  kParseError = 1,       // file or JSON syntax/shape
  kValidationError = 2,  // semantic precondition violations
  kNumericError = 3,     // internal numeric inconsistency
  kIoError = 4,          // unreadable/unwritable paths
};

/// Parse a state file. Unless `normalize` is set, a norm deviating from 1 by
/// more than 1e-9 is rejected; with it, the state is rescaled.
StateVector read_state_file(const std::string& path, bool normalize);

StateVector parse_state_json(const nlohmann::json& doc, bool normalize);

nlohmann::json state_to_json(const StateVector& v);

/// Fixed 12-significant-digit formatting ('.' decimal separator, no locale).
std::string format_number(double value);

/// Write to the path, or to stdout when the path is empty.
void write_output(const std::string& content, const std::string& path);

}  // namespace fgem::cli
