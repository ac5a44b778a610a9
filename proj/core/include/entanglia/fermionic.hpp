#pragma once

#include <array>

#include "entanglia/tensor.hpp"

namespace entanglia {

using C3 = Eigen::Vector3cd;

struct FermionicParams {
  C3 w = C3::Zero();
  C3 z = C3::Zero();
  bool normalized(double tol = 1e-10) const;
};

struct FermionicDerived {
  double eta = 0, sigma = 0, r = 0, s = 0, gamma_plus = 0, gamma_minus = 0;
};

struct FermionicBuild {
  StateVector psi;  // four qubits
  DensityMatrix rho;  // reduced onto qubits 1,2
  Mat lambda;  // rho = (I + lambda)/4 from the closed form
  FermionicDerived derived;
  bool normalized = true;
};

// sum_k v_k sigma_k
Mat sigma_dot(const C3& v);
FermionicDerived fermionic_derived(const FermionicParams& p);
StateVector fermionic_state(const FermionicParams& p);
FermionicBuild fermionic_build(const FermionicParams& p);

// two-parameter family, theta and phi real
FermionicParams fermionic_two_param(double theta, double phi);

struct FermionicMeasures {
  double concurrence, negativity, upper_bound, lower_bound;
};
FermionicMeasures fermionic_measures(const FermionicDerived& d);

struct FourQubitInvariants {
  cplx H, L, M, N, D;
};
FourQubitInvariants four_qubit_invariants(const StateVector& psi);

struct FermionicMonogamy {
  std::array<double, 4> c2_single{};  // C^2(pi_a), a = 1..4
  // Wootters c^2 for pairs 12,13,14,23,24,34, direct eigen-solve
  std::array<double, 6> c2_pair{};
  double sigma1 = 0, sigma2 = 0;  // closed forms
  double residual1 = 0, residual2 = 0;  // C^2(pi_a) - sum of pair terms
  FourQubitInvariants inv{};
};
FermionicMonogamy fermionic_monogamy(const FermionicParams& p);

}  // namespace entanglia
