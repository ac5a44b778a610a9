#include "entanglia/twoqubit.hpp"

#include <algorithm>
#include <cmath>

#include "entanglia/mixedness.hpp"

namespace entanglia {

namespace {
void require_2x2(const Dims& d) {
  if (d.size() != 2 || d[0] != 2 || d[1] != 2) throw StateError("two-qubit state expected");
}

Mat yy() { return kron(pauli(2), pauli(2)); }
}  // namespace

RVec wootters_lambdas(const DensityMatrix& rho) {
  require_2x2(rho.dims);
  // rho = V V^dagger; the nonzero eigenvalues of rho rho~ are the squared
  // singular values of V^T (Y x Y) V.  Avoids the non-Hermitian eigenproblem.
  RVec ev;
  Mat U;
  herm_eigen(rho.m, ev, U);
  Mat V(4, 4);
  for (int i = 0; i < 4; ++i) V.col(i) = U.col(i) * std::sqrt(std::max(0.0, ev(i)));
  Mat tau = V.transpose() * yy() * V;
  RVec s = singular_values(tau);
  std::sort(s.data(), s.data() + s.size(), std::greater<double>());
  return s;
}

double wootters_concurrence(const DensityMatrix& rho) {
  RVec l = wootters_lambdas(rho);
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double pure_concurrence(const Vec& psi) {
  if (psi.size() != 4) throw StateError("two-qubit vector expected");
  return std::abs((psi.transpose() * yy() * psi)(0, 0));
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double entanglement_of_formation(const DensityMatrix& rho) {
  return eof_from_concurrence(wootters_concurrence(rho));
}

}  // namespace entanglia
