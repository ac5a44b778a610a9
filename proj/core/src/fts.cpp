#include "entanglia/fts.hpp"

#include <algorithm>
#include <cmath>

#include "entanglia/luinv.hpp"
#include "entanglia/twoqubit.hpp"

namespace entanglia {

namespace {
void require3(const StateVector& psi) {
  if (psi.dims != Dims{2, 2, 2}) throw StateError("three-qubit vector expected");
}

cplx amp(const Vec& v, int i, int j, int k) { return v(4 * i + 2 * j + k); }

// amplitude with subsystem a moved to the front
cplx amp_a(const Vec& v, int a, int x, int y, int z) {
  int d[3];
  d[a] = x;
  int o1 = a == 0 ? 1 : 0, o2 = a == 2 ? 1 : 2;
  d[o1] = y;
  d[o2] = z;
  return amp(v, d[0], d[1], d[2]);
}

const double kEps[2][2] = {{0, 1}, {-1, 0}};

Eigen::Matrix2cd gamma_of(const Vec& v, int a) {
  Eigen::Matrix2cd g = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          g(i, ip) += kEps[j][1 - j] * kEps[k][1 - k] * amp_a(v, a, i, j, k) *
                      amp_a(v, a, ip, 1 - j, 1 - k);
  return g;
}
}  // namespace

Vec fts_T(const StateVector& psi, int a) {
  require3(psi);
  Eigen::Matrix2cd ge = gamma_of(psi.amps, a) * epsilon2();
  Mat op = Mat::Identity(1, 1);
  for (int j = 0; j < 3; ++j) op = kron(op, j == a ? Mat(ge) : Mat(Mat::Identity(2, 2)));
  return -(op * psi.amps);
}

FtsCovariants fts_covariants(const StateVector& psi) {
  require3(psi);
  FtsCovariants c;
  for (int a = 0; a < 3; ++a) c.gamma[a] = gamma_of(psi.amps, a);
  c.T = fts_T(psi, 0);
  c.q = 2.0 * c.gamma[0].determinant();
  return c;
}

cplx hyperdeterminant(const StateVector& psi) {
  require3(psi);
  const Vec& v = psi.amps;
  cplx p000 = v(0), p001 = v(1), p010 = v(2), p011 = v(3);
  cplx p100 = v(4), p101 = v(5), p110 = v(6), p111 = v(7);
  cplx a = p000 * p111, b = p110 * p001, c = p101 * p010, d = p011 * p100;
  return a * a + b * b + c * c + d * d - 2.0 * (a * b + a * c + a * d + b * c + b * d + c * d) +
         4.0 * (p000 * p110 * p101 * p011 + p111 * p001 * p010 * p100);
}

double three_tangle(const StateVector& psi) { return 4.0 * std::abs(hyperdeterminant(psi)); }

FtsInvariants fts_invariants_raw(const StateVector& psi) {
  FtsCovariants c = fts_covariants(psi);
  FtsInvariants v;
  v.n = psi.amps.squaredNorm();
  for (int a = 0; a < 3; ++a) v.g[a] = c.gamma[a].squaredNorm();
  for (int a = 0; a < 3; ++a) v.c2[a] = v.g[(a + 1) % 3] + v.g[(a + 2) % 3];
  v.y = 2.0 / 3.0 * (v.g[0] + v.g[1] + v.g[2]);
  v.t = 4.0 * c.T.squaredNorm();
  v.tau2 = 4.0 * std::norm(c.q);
  return v;
}

FtsInvariants fts_invariants(const StateVector& psi) {
  require3(psi);
  const double nn = psi.amps.squaredNorm();
  if (nn == 0.0) return FtsInvariants{};
  StateVector u(psi.dims, psi.amps / std::sqrt(nn));
  return fts_invariants_raw(u);
}

CanonicalInvariants canonical_invariants(const StateVector& psi) {
  require3(psi);
  DensityMatrix pi = projector(psi);
  CanonicalInvariants c;
  c.I0 = psi.amps.squaredNorm();
  double Ia[3];
  Mat pa[3];
  for (int a = 0; a < 3; ++a) {
    pa[a] = reduced(pi, {a}).m;
    Ia[a] = (pa[a] * pa[a]).trace().real();
  }
  c.I1 = Ia[0];
  c.I2 = Ia[1];
  c.I3 = Ia[2];
  Mat p23 = reduced(pi, {1, 2}).m;
  c.I4 = 3.0 * (kron(pa[1], pa[2]) * p23).trace().real() - (pa[1] * pa[1] * pa[1]).trace().real() -
         (pa[2] * pa[2] * pa[2]).trace().real();
  c.I5 = std::norm(hyperdeterminant(psi));

  auto f = [&](const char* l) { return pure_invariant(psi, PermLabel::parse(l, 3)); };
  const double kempe = f("s,s2");
  c.kempe_residual = kempe - (3.0 * f("t,s") - f("e,s") - f("s,s"));
  const double tn = fts_T(psi, 0).squaredNorm();
  c.t_norm_residual = 6.0 * tn - (4.0 * kempe + 5.0 * f("e,e") - 3.0 * f("e,t") - 3.0 * f("t,e") -
                                  3.0 * f("t,t"));
  return c;
}

FtsInvariants fts_from_canonical(const CanonicalInvariants& c) {
  FtsInvariants v;
  const double I[3] = {c.I1, c.I2, c.I3};
  const double s = c.I1 + c.I2 + c.I3, n2 = c.I0 * c.I0;
  v.n = c.I0;
  v.y = 2.0 * n2 - 2.0 / 3.0 * s;
  for (int a = 0; a < 3; ++a) {
    v.c2[a] = 2.0 * (n2 - I[a]);
    v.g[a] = n2 + I[a] - I[(a + 1) % 3] - I[(a + 2) % 3];
  }
  v.t = 8.0 / 3.0 * c.I4 + 10.0 / 3.0 * n2 * c.I0 - 2.0 * c.I0 * s;
  // with Det the Cayley hyperdeterminant, tau = 4|Det|
  v.tau2 = 16.0 * c.I5;
  return v;
}

std::string slocc_class_from(const FtsInvariants& v, double eps) {
  auto z = [&](double x) { return x < eps; };
  if (z(v.n)) return "Null";
  const bool zc[3] = {z(v.c2[0]), z(v.c2[1]), z(v.c2[2])};
  const bool zg[3] = {z(v.g[0]), z(v.g[1]), z(v.g[2])};
  if (z(v.y) && zc[0] && zc[1] && zc[2] && zg[0] && zg[1] && zg[2] && z(v.t) && z(v.tau2))
    return "1|2|3";
  static const char* names[3] = {"1|23", "2|13", "3|12"};
  for (int a = 0; a < 3; ++a) {
    int b = (a + 1) % 3, c = (a + 2) % 3;
    if (!z(v.y) && zc[a] && !zc[b] && !zc[c] && !zg[a] && zg[b] && zg[c] && z(v.t) && z(v.tau2))
      return names[a];
  }
  bool all = !z(v.y) && !zc[0] && !zc[1] && !zc[2] && !zg[0] && !zg[1] && !zg[2] && !z(v.t);
  if (all && z(v.tau2)) return "W";
  if (all && !z(v.tau2)) return "GHZ";
  return "undecided";
}

std::string slocc_class_pure(const StateVector& psi, double eps) {
  return slocc_class_from(fts_invariants(psi), eps);
}

std::array<PairRelation, 3> reduced_concurrence_fidelity(const StateVector& psi) {
  require3(psi);
  const double nn = psi.amps.squaredNorm();
  if (nn == 0.0) throw StateError("zero vector");
  StateVector u(psi.dims, psi.amps / std::sqrt(nn));
  FtsInvariants v = fts_invariants_raw(u);
  const double tau = std::sqrt(v.tau2);
  DensityMatrix pi = projector(u);
  double wc2[3][3] = {};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      double c = wootters_concurrence(reduced(pi, {a, b}));
      wc2[a][b] = wc2[b][a] = c * c;
    }
  std::array<PairRelation, 3> out;
  for (int a = 0; a < 3; ++a) {
    int b = (a + 1) % 3, c = (a + 2) % 3;
    PairRelation& r = out[a];
    r.a = a;
    r.b = std::min(b, c);
    r.c = std::max(b, c);
    r.wootters2 = wc2[b][c];
    r.predicted2 = std::max(0.0, v.g[a] - tau / 2.0);
    r.fidelity2 = v.g[a] + tau / 2.0;
    r.ckw_residual = v.c2[a] - wc2[a][b] - wc2[a][c] - tau;
  }
  return out;
}

}  // namespace entanglia
