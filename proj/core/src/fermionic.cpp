#include "entanglia/fermionic.hpp"

#include <algorithm>
#include <cmath>

#include "entanglia/mixedness.hpp"
#include "entanglia/twoqubit.hpp"

namespace entanglia {

namespace {
const cplx I1(0, 1);

cplx dot(const C3& a, const C3& b) { return (a.array() * b.array()).sum(); }  // a.b, no conj

// bilinear; Eigen's cross conjugates complex results
C3 cross(const C3& a, const C3& b) {
  return C3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0));
}

Mat symmetric_block(const C3& v) {
  Mat a(2, 2);
  a << v(0) - I1 * v(1), -v(2), -v(2), -v(0) - I1 * v(1);
  return a;
}

double pos(double x) { return std::max(0.0, x); }

cplx det4(Mat m) { return m.determinant(); }
}  // namespace

bool FermionicParams::normalized(double tol) const {
  return std::abs(w.squaredNorm() + z.squaredNorm() - 1.0) <= tol;
}

Mat sigma_dot(const C3& v) { return v(0) * pauli(1) + v(1) * pauli(2) + v(2) * pauli(3); }

FermionicDerived fermionic_derived(const FermionicParams& p) {
  FermionicDerived d;
  C3 x = I1 * cross(p.w, p.w.conjugate());
  C3 y = I1 * cross(p.z, p.z.conjugate());
  cplx w2 = dot(p.w, p.w), z2 = dot(p.z, p.z);
  d.eta = std::abs(w2 - z2);
  d.sigma = std::abs(w2 + z2);
  d.r = x.norm();
  d.s = y.norm();
  d.gamma_plus = d.r + d.s;
  d.gamma_minus = std::abs(d.r - d.s);
  return d;
}

StateVector fermionic_state(const FermionicParams& p) {
  Mat A = symmetric_block(p.z), B = symmetric_block(p.w), e = epsilon2();
  Vec psi(16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          psi(((i * 2 + j) * 2 + k) * 2 + l) = 0.5 * (e(i, k) * A(j, l) + B(i, k) * e(j, l));
  return StateVector({2, 2, 2, 2}, psi);
}

FermionicBuild fermionic_build(const FermionicParams& p) {
  FermionicBuild b;
  b.normalized = p.normalized();
  b.psi = fermionic_state(p);
  b.rho = reduced(b.psi, {0, 1});
  C3 x = I1 * cross(p.w, p.w.conjugate());
  C3 y = I1 * cross(p.z, p.z.conjugate());
  Mat id = Mat::Identity(2, 2);
  b.lambda = kron(sigma_dot(x), id) + kron(id, sigma_dot(y)) +
             kron(sigma_dot(p.w), sigma_dot(p.z.conjugate())) +
             kron(sigma_dot(p.w.conjugate()), sigma_dot(p.z));
  b.derived = fermionic_derived(p);
  return b;
}

FermionicParams fermionic_two_param(double theta, double phi) {
  FermionicParams p;
  const cplx e = std::exp(I1 * phi);
  p.w << 1.0, e, 0.0;
  p.z << 1.0, e, 0.0;
  p.w *= std::cos(theta) / std::sqrt(2.0);
  p.z *= std::sin(theta) / std::sqrt(2.0);
  return p;
}

FermionicMeasures fermionic_measures(const FermionicDerived& d) {
  if (d.eta < -1e-12 || d.eta > 1 + 1e-9 || d.gamma_plus > 1 + 1e-9)
    throw StateError("fermionic derived quantities out of range");
  const double e2 = d.eta * d.eta, gm2 = d.gamma_minus * d.gamma_minus,
               gp2 = d.gamma_plus * d.gamma_plus;
  FermionicMeasures m;
  m.concurrence = pos(0.5 * (std::sqrt(pos(1 - e2 - gm2)) - std::sqrt(pos(1 - gp2))));
  m.negativity = pos(0.5 * (std::sqrt(pos(1 - e2 - gm2 + gp2)) - 1));
  const double c = m.concurrence;
  m.lower_bound = 0.5 * (std::sqrt(1 + 4 * c * c) - 1);
  m.upper_bound = 0.5 * (std::sqrt(2 - (1 - 2 * c) * (1 - 2 * c)) - 1);
  return m;
}

FourQubitInvariants four_qubit_invariants(const StateVector& psi) {
  if (psi.dims != Dims{2, 2, 2, 2}) throw StateError("four-qubit vector expected");
  auto a = [&](int i, int j, int k, int l) { return psi.amps(((i * 2 + j) * 2 + k) * 2 + l); };
  Mat e = epsilon2();
  FourQubitInvariants r;
  cplx h = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          for (int i2 = 0; i2 < 2; ++i2)
            for (int j2 = 0; j2 < 2; ++j2)
              for (int k2 = 0; k2 < 2; ++k2)
                for (int l2 = 0; l2 < 2; ++l2)
                  h += e(i, i2) * e(j, j2) * e(k, k2) * e(l, l2) * a(i, j, k, l) * a(i2, j2, k2, l2);
  r.H = 0.5 * h;
  Mat L(4, 4), M(4, 4), N(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          L(i * 2 + j, k * 2 + l) = a(i, j, k, l);
          M(k * 2 + i, j * 2 + l) = a(i, j, k, l);
          N(i * 2 + l, j * 2 + k) = a(i, j, k, l);
        }
  r.L = det4(L);
  r.M = det4(M);
  r.N = det4(N);
  // B(p, q): coefficient of x-monomial p in {x0^2, x0x1, x1^2} and t-monomial q
  Mat Bm = Mat::Zero(3, 3);
  for (int i = 0; i < 2; ++i)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int l = 0; l < 2; ++l)
        for (int l2 = 0; l2 < 2; ++l2) {
          cplx c = 0;
          for (int j = 0; j < 2; ++j)
            for (int j2 = 0; j2 < 2; ++j2)
              for (int k = 0; k < 2; ++k)
                for (int k2 = 0; k2 < 2; ++k2)
                  c += e(j, j2) * e(k, k2) * a(i, j, k, l) * a(i2, j2, k2, l2);
          Bm(i + i2, l + l2) += 0.5 * c;
        }
  r.D = Bm.determinant();
  return r;
}

FermionicMonogamy fermionic_monogamy(const FermionicParams& p) {
  FermionicMonogamy m;
  StateVector psi = fermionic_state(p);
  for (int a = 0; a < 4; ++a) m.c2_single[a] = purity_stats(reduced(psi, {a})).concurrence_squared;
  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int q = 0; q < 6; ++q) {
    double c = wootters_concurrence(reduced(psi, {pairs[q][0], pairs[q][1]}));
    m.c2_pair[q] = c * c;
  }
  m.residual1 = m.c2_single[0] - m.c2_pair[0] - m.c2_pair[1] - m.c2_pair[2];
  m.residual2 = m.c2_single[1] - m.c2_pair[0] - m.c2_pair[3] - m.c2_pair[4];

  FermionicDerived d = fermionic_derived(p);
  const double nz = p.z.squaredNorm(), nw = p.w.squaredNorm();
  const double aw = std::abs(dot(p.w, p.w)), az = std::abs(dot(p.z, p.z));
  const double e2 = d.eta * d.eta, s2 = d.sigma * d.sigma;
  if (e2 >= 4 * d.r * d.s) {
    m.sigma1 = 2 * nz * (aw + nw);
    m.sigma2 = 2 * nw * (az + nz);
  } else {
    const double pp = 2 * nz * nw + 0.5 * (4 * d.r * d.s - e2);
    const double pm = 2 * nz * nw - 0.5 * (4 * d.r * d.s - e2);
    const double root = std::sqrt(pos((0.5 * s2 + pp) * (0.5 * s2 + pm)));
    m.sigma1 = 2 * nz * aw + root - 0.5 * s2;
    m.sigma2 = 2 * nw * az + root - 0.5 * s2;
  }
  m.inv = four_qubit_invariants(psi);
  return m;
}

}  // namespace entanglia
