#pragma once

#include <array>
#include <string>

#include "entanglia/tensor.hpp"

namespace entanglia {

// Three-qubit covariants.  gamma[a] is the 2x2 symmetric contraction on the
// subsystem a, T the cubic covariant and q the quartic scalar.
struct FtsCovariants {
  std::array<Eigen::Matrix2cd, 3> gamma;
  Vec T;  // 8 entries, |ijk> order
  cplx q;
};

struct FtsInvariants {
  double n = 0, y = 0, t = 0, tau2 = 0;
  std::array<double, 3> c2{}, g{};
};

struct CanonicalInvariants {
  double I0 = 0, I1 = 0, I2 = 0, I3 = 0, I4 = 0, I5 = 0;
  // Residuals of the qubit-only identities among the grade-3 LU polynomials.
  double kempe_residual = 0;
  double t_norm_residual = 0;
};

FtsCovariants fts_covariants(const StateVector& psi);
// T computed from gamma_a for a = 0, 1, 2; the three agree.
Vec fts_T(const StateVector& psi, int a);
// Cayley hyperdeterminant, explicit expansion.
cplx hyperdeterminant(const StateVector& psi);
double three_tangle(const StateVector& psi);  // 4|Det|

// Raw (unnormalized) values; homogeneous of degree 2, 4, 4, 4, 6, 8.
FtsInvariants fts_invariants_raw(const StateVector& psi);
// Values for psi / |psi|.
FtsInvariants fts_invariants(const StateVector& psi);
CanonicalInvariants canonical_invariants(const StateVector& psi);
// The FTS set predicted from I0..I5.
FtsInvariants fts_from_canonical(const CanonicalInvariants& c);

// "Null", "1|2|3", "1|23", "2|13", "3|12", "W", "GHZ" or "undecided".
std::string slocc_class_pure(const StateVector& psi, double eps = 1e-6);
std::string slocc_class_from(const FtsInvariants& v, double eps = 1e-6);

struct PairRelation {
  int a, b, c;              // pair bc, a the remaining qubit
  double wootters2;         // squared Wootters concurrence of pi_bc, direct
  double predicted2;        // g_a - tau/2
  double fidelity2;         // g_a + tau/2
  double ckw_residual;      // c2_a - wc2(a,b) - wc2(a,c) - tau
};
std::array<PairRelation, 3> reduced_concurrence_fidelity(const StateVector& psi);

}  // namespace entanglia
