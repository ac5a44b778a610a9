#include "entanglia/multiqubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entanglia/lattice.hpp"

namespace entanglia {

SpinSetting SpinSetting::uniform(int n, const SpinTriple& t) {
  SpinSetting s;
  s.sites.assign(n, t);
  return s;
}

SpinSetting SpinSetting::setting_I(int n) { return uniform(n, {pauli(1), pauli(2), pauli(3)}); }
SpinSetting SpinSetting::setting_II(int n) { return uniform(n, {pauli(2), pauli(3), pauli(1)}); }
SpinSetting SpinSetting::setting_III(int n) { return uniform(n, {pauli(3), pauli(1), pauli(2)}); }

void SpinSetting::validate() const {
  if (sites.empty()) throw StateError("empty spin setting");
  const Mat id = Mat::Identity(2, 2);
  for (auto& t : sites) {
    const Mat* ops[3] = {&t.X, &t.Y, &t.Z};
    for (int a = 0; a < 3; ++a) {
      const Mat& A = *ops[a];
      if (A.rows() != 2 || A.cols() != 2) throw StateError("spin observables must be 2x2");
      if ((A - A.adjoint()).norm() > 1e-10) throw StateError("spin observable not Hermitian");
      if ((A * A - id).norm() > 1e-10) throw StateError("spin observable does not square to I");
      for (int b = a + 1; b < 3; ++b)
        if (std::abs((A * *ops[b]).trace()) > 1e-10) throw StateError("spin triple not orthogonal");
    }
  }
}

SuOperators su_operators(const SpinSetting& setting) {
  setting.validate();
  const int n = static_cast<int>(setting.sites.size());
  const Mat id = Mat::Identity(2, 2);
  SuOperators cur;
  const SpinTriple& last = setting.sites[n - 1];
  cur.X = {last.X};
  cur.Y = {last.Y};
  cur.Z = {last.Z};
  cur.I = {id};
  for (int j = n - 2; j >= 0; --j) {
    const SpinTriple& s = setting.sites[j];
    SuOperators nxt;
    for (size_t u = 0; u < cur.X.size(); ++u) {
      Mat xx = kron(s.X, cur.X[u]), yy = kron(s.Y, cur.Y[u]);
      Mat yx = kron(s.Y, cur.X[u]), xy = kron(s.X, cur.Y[u]);
      Mat zi = kron(s.Z, cur.I[u]), iz = kron(id, cur.Z[u]);
      Mat ii = kron(id, cur.I[u]), zz = kron(s.Z, cur.Z[u]);
      nxt.X.push_back(0.5 * (xx - yy));
      nxt.X.push_back(0.5 * (xx + yy));
      nxt.Y.push_back(0.5 * (yx + xy));
      nxt.Y.push_back(0.5 * (yx - xy));
      nxt.Z.push_back(0.5 * (zi + iz));
      nxt.Z.push_back(0.5 * (zi - iz));
      nxt.I.push_back(0.5 * (ii + zz));
      nxt.I.push_back(0.5 * (ii - zz));
    }
    cur = std::move(nxt);
  }
  return cur;
}

namespace {
void require_3qubits(const DensityMatrix& rho) {
  if (rho.dims != Dims{2, 2, 2}) throw StateError("three-qubit state expected");
}

double expect(const DensityMatrix& rho, const Mat& op) { return (rho.m * op).trace().real(); }

double diag(const DensityMatrix& rho, int i) { return std::max(0.0, rho.m(i, i).real()); }
double offabs(const DensityMatrix& rho, int i, int j) { return std::abs(rho.m(i, j)); }
}  // namespace

SuVerdicts su_criteria(const DensityMatrix& rho, const SpinSetting& setting) {
  require_3qubits(rho);
  if (setting.sites.size() != 3) throw StateError("three-site setting expected");
  SuOperators ops = su_operators(setting);
  double xy[4], iz[4];
  for (int x = 0; x < 4; ++x) {
    double ex = expect(rho, ops.X[x]), ey = expect(rho, ops.Y[x]);
    double ei = expect(rho, ops.I[x]), ez = expect(rho, ops.Z[x]);
    xy[x] = ex * ex + ey * ey;
    iz[x] = (ei - ez) * (ei + ez);  // factored: the difference of squares cancels badly
  }
  std::vector<double> bis;
  for (int x = 0; x < 4; ++x) {
    double rhs = 0;
    for (int y = 0; y < 4; ++y)
      if (y != x) rhs += std::sqrt(std::max(0.0, iz[y]));
    bis.push_back(rhs - std::sqrt(xy[x]));
  }
  double mx = *std::max_element(xy, xy + 4), mn = *std::min_element(iz, iz + 4);
  SuVerdicts v;
  v.bisep = CriterionVerdict::make("su-2sep", bis);
  v.all_bipartitions = CriterionVerdict::make("su-bipartitions", {mn - mx, 0.25 - mn});
  v.fullsep = CriterionVerdict::make("su-3sep", {mn - mx, 1.0 / 16 - mn});
  return v;
}

const std::vector<GsVariant>& gs_full_sep_variants() {
  static const std::vector<GsVariant> v = {
      {"gs3.1g:r6.1", {3, 0, 0, 0, 0, 0, 0, 3}, 6},
      {"gs3.1g:r6.2", {0, 1, 1, 1, 1, 1, 1, 0}, 6},
      {"gs3.1g:r6.3", {1, 2, 0, 0, 0, 0, 2, 1}, 6},
      {"gs3.1g:r6.4", {2, 1, 0, 0, 0, 0, 1, 2}, 6},
      {"gs3.1g:r6.5", {1, 1, 1, 0, 1, 0, 0, 2}, 6},
      {"gs3.1g:r6.6", {2, 0, 0, 1, 0, 1, 1, 1}, 6},
      {"gs3.1g:r6.7", {0, 2, 1, 0, 1, 0, 1, 1}, 6},
      {"gs3.1g:r6.8", {1, 1, 0, 1, 0, 1, 2, 0}, 6},
      {"gs3.1g:r4.1", {2, 0, 0, 0, 0, 0, 0, 2}, 4},
      {"gs3.1g:r4.2", {0, 0, 1, 1, 1, 1, 0, 0}, 4},
      {"gs3.1g:r4.3", {1, 1, 0, 0, 0, 0, 1, 1}, 4},
      {"gs3.1g:r4.4", {0, 1, 1, 0, 1, 0, 0, 1}, 4},
      {"gs3.1g:r4.5", {1, 0, 0, 1, 0, 1, 1, 0}, 4},
  };
  return v;
}

std::vector<CriterionVerdict> gs_matrix_criteria(const DensityMatrix& rho) {
  require_3qubits(rho);
  auto d = [&](int i) { return diag(rho, i); };
  std::vector<CriterionVerdict> out;
  {
    double rhs = std::sqrt(d(6) * d(1)) + std::sqrt(d(5) * d(2)) + std::sqrt(d(3) * d(4));
    out.push_back(CriterionVerdict::make("gs2a", {rhs - offabs(rho, 0, 7)}));
  }
  const double lhs_w = offabs(rho, 1, 2) + offabs(rho, 1, 4) + offabs(rho, 2, 4);
  const double rhs_w = std::sqrt(d(0) * d(3)) + std::sqrt(d(0) * d(5)) + std::sqrt(d(0) * d(6));
  out.push_back(CriterionVerdict::make("gs2b", {rhs_w + (d(1) + d(2) + d(4)) / 2 - lhs_w}));
  for (auto& var : gs_full_sep_variants()) {
    double prod = 1;
    for (int i = 0; i < 8; ++i) prod *= std::pow(d(i), var.exponents[i]);
    out.push_back(CriterionVerdict::make(var.id, {std::pow(prod, 1.0 / var.root) - offabs(rho, 0, 7)}));
  }
  out.push_back(CriterionVerdict::make("gs3.2g", {rhs_w - lhs_w}));
  return out;
}

CriterionVerdict gs_criterion(const DensityMatrix& rho, const std::string& id) {
  for (auto& v : gs_matrix_criteria(rho))
    if (v.id == id) return v;
  throw StateError("unknown matrix-element criterion: " + id);
}

namespace {
StateVector swap_copies(const StateVector& phi, int n, const std::vector<int>& K) {
  std::vector<int> order(2 * n);
  for (int j = 0; j < 2 * n; ++j) order[j] = j;
  for (int a : K) std::swap(order[a], order[a + n]);
  return reorder(phi, order);
}

void require_product(const StateVector& phi) {
  if (phi.norm2() < 1e-300) throw StateError("detection vector is zero");
  for (int a = 0; a < phi.n(); ++a) {
    DensityMatrix r = reduced(phi, {a});
    double tr = r.trace().real();
    double p = (r.m * r.m).trace().real() / (tr * tr);
    if (std::abs(1 - p) > 1e-9) throw StateError("detection vector is not a product vector");
  }
}
}  // namespace

CriterionVerdict gabriel_criterion(const DensityMatrix& rho, int k, const StateVector& phi) {
  const int n = rho.n();
  Dims dd = rho.dims;
  dd.insert(dd.end(), rho.dims.begin(), rho.dims.end());
  if (phi.dims != dd) throw StateError("detection vector must live on two copies of the system");
  if (k < 2 || k > n) throw StateError("k out of range");
  require_product(phi);
  const Mat rr = kron(rho.m, rho.m);
  std::vector<int> all(n);
  for (int a = 0; a < n; ++a) all[a] = a;
  Vec ptot = swap_copies(phi, n, all).amps;
  const double lhs = std::sqrt(std::abs(phi.amps.dot(rr * ptot)));
  double rhs = 0;
  for (auto& split : k_partitions(n, k)) {
    double prod = 1;
    for (auto& blk : split.blocks) {
      Vec v = swap_copies(phi, n, blk).amps;
      prod *= std::max(0.0, v.dot(rr * v).real());
    }
    rhs += std::pow(prod, 1.0 / (2 * k));
  }
  return CriterionVerdict::make("gabriel-k" + std::to_string(k), {rhs - lhs});
}

StateVector phi_ghz(int n) {
  std::vector<int> digits(2 * n, 0);
  for (int j = n; j < 2 * n; ++j) digits[j] = 1;
  return basis_state(Dims(2 * n, 2), digits);
}

StateVector phi_w(int n) {
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Mat H = Mat::Identity(1, 1);
  for (int j = 0; j < 2 * n; ++j) H = kron(H, h);
  StateVector g = phi_ghz(n);
  return StateVector(g.dims, H * g.amps);
}

const std::vector<std::pair<std::string, std::vector<int>>>& tripartite_permutations() {
  static const std::vector<std::pair<std::string, std::vector<int>>> p = {
      {"perm(14)", {3, 1, 2, 0, 4, 5}}, {"perm(25)", {0, 4, 2, 3, 1, 5}},
      {"perm(36)", {0, 1, 5, 3, 4, 2}}, {"perm(35)", {0, 1, 4, 3, 2, 5}},
      {"perm(34)", {0, 1, 3, 2, 4, 5}}, {"perm(24)", {0, 3, 2, 1, 4, 5}},
  };
  return p;
}

std::vector<CriterionVerdict> permutation_criterion(const DensityMatrix& rho) {
  require_3qubits(rho);
  std::vector<CriterionVerdict> out;
  const double tr = rho.trace().real();
  for (auto& [id, sigma] : tripartite_permutations()) {
    Mat m = permute_systems(rho, sigma);
    out.push_back(CriterionVerdict::make(id, {1.0 - trace_norm(m) / tr}));
  }
  return out;
}

StateVector ghz_state(int n) {
  Vec a = Vec::Zero(1L << n);
  a(0) = a((1L << n) - 1) = 1.0 / std::sqrt(2.0);
  return StateVector(Dims(n, 2), a);
}

StateVector w_state(int n) {
  Vec a = Vec::Zero(1L << n);
  for (int j = 0; j < n; ++j) a(1L << j) = 1.0 / std::sqrt(static_cast<double>(n));
  return StateVector(Dims(n, 2), a);
}

std::vector<CriterionVerdict> witness_criteria(const DensityMatrix& rho) {
  require_3qubits(rho);
  const double tr = rho.trace().real();
  Vec g = ghz_state(3).amps, w = w_state(3).amps;
  const double fg = (g.adjoint() * rho.m * g)(0, 0).real();
  const double fw = (w.adjoint() * rho.m * w)(0, 0).real();
  return {CriterionVerdict::make("wit-ghz", {0.75 * tr - fg}),
          CriterionVerdict::make("wit-w1", {2.0 / 3 * tr - fw}),
          CriterionVerdict::make("wit-w2", {0.5 * tr - fg})};
}

}  // namespace entanglia
