#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "entanglia/tensor.hpp"

namespace entanglia {

// Evaluated on normalized vectors only.
using PureFunctional = std::function<double(const StateVector&)>;

struct Ensemble {
  std::vector<double> weights;
  std::vector<StateVector> vectors;  // normalized
};

struct RoofOptions {
  int restarts = 32;
  int max_steps = 2000;
  std::uint64_t seed = 1;
  double fd_step = 1e-5;
  // stop when the value drops below this, or the Riemannian gradient norm does
  double value_floor = 1e-14;
  double grad_tol = 1e-10;
  int ensemble_size = 0;  // 0: (rank)^2
  int max_workers = 0;    // 0: worker_count()
  // extra starting points, each a decomposition of rho
  std::vector<Ensemble> hints;
};

struct RoofResult {
  double value = 0;
  std::vector<double> weights;
  std::vector<StateVector> vectors;
  int restarts_used = 0;
  bool converged = false;
  int steps = 0;
  int best_restart = -1;  // hints come after the random restarts
};

RoofResult convex_roof(const DensityMatrix& rho, const PureFunctional& f, const RoofOptions& opt = {});

// Sum p_i f(psi_i).
double ensemble_value(const Ensemble& e, const PureFunctional& f);
// rho minus sum p_i |psi_i><psi_i|, Frobenius norm.
double ensemble_residual(const DensityMatrix& rho, const Ensemble& e);
Ensemble result_ensemble(const RoofResult& r);

}  // namespace entanglia
