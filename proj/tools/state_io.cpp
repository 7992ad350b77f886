#include "state_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

namespace fgem::cli {

StateVector parse_state_json(const nlohmann::json& doc, bool normalize) {
  const int modes = doc.at("modes").get<int>();
  if (modes < 1 || modes > StateVector::kMaxModeCount) {
    throw ValidationError("modes must be in [1, 62]");
  }
  StateVector v(modes);
  for (const auto& entry : doc.at("amplitudes")) {
    const std::string basis = entry.at("basis").get<std::string>();
    if (static_cast<int>(basis.size()) != modes) {
      throw ValidationError("basis string '" + basis + "' does not have " +
                            std::to_string(modes) + " bits");
    }
    std::uint64_t label = 0;
    for (char c : basis) {
      if (c != '0' && c != '1') {
        throw ValidationError("basis string '" + basis + "' has characters other than 0/1");
      }
      label = (label << 1) | static_cast<std::uint64_t>(c == '1');
    }
    v.add_coeff(label, Complex{entry.at("re").get<double>(), entry.at("im").get<double>()});
  }
  if (normalize) return v.normalized();
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw ValidationError("state file norm deviates from 1 by more than 1e-9 "
                          "(pass --normalize to rescale)");
  }
  return v;
}

StateVector read_state_file(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file '" + path + "'");
  nlohmann::json doc = nlohmann::json::parse(in);
  return parse_state_json(doc, normalize);
}

nlohmann::json state_to_json(const StateVector& v) {
  nlohmann::json amplitudes = nlohmann::json::array();
  v.for_each_nonzero([&](std::uint64_t label, Complex a) {
    amplitudes.push_back({{"basis", state_from_label(label, v.mode_count()).to_string()},
                          {"re", a.real()},
                          {"im", a.imag()}});
  });
  return {{"modes", v.mode_count()}, {"amplitudes", amplitudes}};
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output path '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace fgem::cli
