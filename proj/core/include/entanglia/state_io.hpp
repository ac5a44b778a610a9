#pragma once

#include <string>

#include "entanglia/roof.hpp"
#include "entanglia/tensor.hpp"

namespace entanglia {

// {"dims": [...], "kind": "vector" | "density", "data": [[re, im], ...]}
// Density data may be flat (row-major) or nested by rows.
struct LoadedState {
  bool is_vector = false;
  StateVector psi;
  DensityMatrix rho;

  DensityMatrix density() const { return is_vector ? projector(psi) : rho; }
};

LoadedState parse_state(const std::string& json_text);
LoadedState load_state(const std::string& path);
std::string dump_state(const StateVector& psi);
std::string dump_state(const DensityMatrix& rho);
void save_text(const std::string& path, const std::string& text);

std::string roof_json(const RoofResult& r);

}  // namespace entanglia
