#pragma once

#include "entanglia/tensor.hpp"

namespace entanglia {

// Decreasing lambda_i: square roots of the eigenvalues of rho * rho~.
RVec wootters_lambdas(const DensityMatrix& rho);
double wootters_concurrence(const DensityMatrix& rho);
// |<psi~|psi>| for a two-qubit vector (need not be normalized)
double pure_concurrence(const Vec& psi);
double eof_from_concurrence(double c);  // base 2
double entanglement_of_formation(const DensityMatrix& rho);

}  // namespace entanglia
