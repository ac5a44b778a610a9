#include "entanglia/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entanglia {

long total_dim(const Dims& dims) {
  long d = 1;
  for (int x : dims) d *= x;
  return d;
}

void check_dims(const Dims& dims) {
  if (dims.empty()) throw StateError("empty dimension list");
  for (int d : dims)
    if (d < 1) throw StateError("local dimension must be positive");
}

StateVector::StateVector(Dims d, Vec a) : dims(std::move(d)), amps(std::move(a)) {
  check_dims(dims);
  if (amps.size() != total_dim(dims)) throw StateError("amplitude count does not match dims");
  if (!amps.allFinite()) throw StateError("non-finite amplitude");
}

DensityMatrix::DensityMatrix(Dims d, Mat a) : dims(std::move(d)), m(std::move(a)) {
  check_dims(dims);
  long D = total_dim(dims);
  if (m.rows() != D || m.cols() != D) throw StateError("matrix side does not match dims");
  if (!m.allFinite()) throw StateError("non-finite matrix entry");
}

DensityMatrix projector(const StateVector& psi) {
  return DensityMatrix(psi.dims, psi.amps * psi.amps.adjoint());
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  Dims d = a.dims;
  d.insert(d.end(), b.dims.begin(), b.dims.end());
  Mat r = kron(Mat(a.amps), Mat(b.amps));
  return StateVector(d, r.col(0));
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  Dims d = a.dims;
  d.insert(d.end(), b.dims.begin(), b.dims.end());
  return DensityMatrix(d, kron(a.m, b.m));
}

std::vector<int> digits_of(long index, const Dims& dims) {
  std::vector<int> dg(dims.size());
  for (int j = static_cast<int>(dims.size()) - 1; j >= 0; --j) {
    dg[j] = static_cast<int>(index % dims[j]);
    index /= dims[j];
  }
  return dg;
}

long index_of(const std::vector<int>& digits, const Dims& dims) {
  long idx = 0;
  for (size_t j = 0; j < dims.size(); ++j) idx = idx * dims[j] + digits[j];
  return idx;
}

StateVector basis_state(const Dims& dims, const std::vector<int>& digits) {
  if (digits.size() != dims.size()) throw StateError("digit count does not match dims");
  Vec v = Vec::Zero(total_dim(dims));
  v(index_of(digits, dims)) = 1.0;
  return StateVector(dims, v);
}

SubsystemSet complement(const SubsystemSet& k, int n) {
  SubsystemSet out;
  for (int j = 0; j < n; ++j)
    if (std::find(k.begin(), k.end(), j) == k.end()) out.push_back(j);
  return out;
}

namespace {

void check_subset(const SubsystemSet& s, int n) {
  for (int j : s)
    if (j < 0 || j >= n) throw StateError("subsystem index out of range");
  SubsystemSet t = s;
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end())
    throw StateError("repeated subsystem index");
}

// old linear index for every new linear index under a factor reordering
std::vector<long> reorder_map(const Dims& dims, const std::vector<int>& order) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(order.size()) != n) throw StateError("reorder needs a full permutation");
  check_subset(order, n);
  std::vector<long> oldstride(n);
  long s = 1;
  for (int j = n - 1; j >= 0; --j) {
    oldstride[j] = s;
    s *= dims[j];
  }
  Dims nd(n);
  for (int j = 0; j < n; ++j) nd[j] = dims[order[j]];
  std::vector<long> map(s);
  std::vector<int> dg(n, 0);
  for (long idx = 0; idx < s; ++idx) {
    long old = 0;
    for (int j = 0; j < n; ++j) old += dg[j] * oldstride[order[j]];
    map[idx] = old;
    for (int j = n - 1; j >= 0; --j) {
      if (++dg[j] < nd[j]) break;
      dg[j] = 0;
    }
  }
  return map;
}

}  // namespace

StateVector reorder(const StateVector& psi, const std::vector<int>& order) {
  auto map = reorder_map(psi.dims, order);
  Vec out(psi.amps.size());
  for (size_t i = 0; i < map.size(); ++i) out(i) = psi.amps(map[i]);
  Dims nd;
  for (int j : order) nd.push_back(psi.dims[j]);
  return StateVector(nd, out);
}

DensityMatrix reorder(const DensityMatrix& rho, const std::vector<int>& order) {
  auto map = reorder_map(rho.dims, order);
  const long D = static_cast<long>(map.size());
  Mat out(D, D);
  for (long c = 0; c < D; ++c)
    for (long r = 0; r < D; ++r) out(r, c) = rho.m(map[r], map[c]);
  Dims nd;
  for (int j : order) nd.push_back(rho.dims[j]);
  return DensityMatrix(nd, out);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSet& traced) {
  const int n = rho.n();
  check_subset(traced, n);
  SubsystemSet kept = complement(traced, n);
  if (kept.empty()) {
    Mat one(1, 1);
    one(0, 0) = rho.m.trace();
    return DensityMatrix(Dims{1}, one);
  }
  if (traced.empty()) return rho;
  std::vector<int> order = kept;
  SubsystemSet tr = traced;
  std::sort(tr.begin(), tr.end());
  order.insert(order.end(), tr.begin(), tr.end());
  DensityMatrix r = reorder(rho, order);
  Dims kd;
  for (int j : kept) kd.push_back(rho.dims[j]);
  const long dk = total_dim(kd);
  const long dt = total_dim(rho.dims) / dk;
  Mat out = Mat::Zero(dk, dk);
  for (long t = 0; t < dt; ++t)
    for (long c = 0; c < dk; ++c)
      for (long a = 0; a < dk; ++a) out(a, c) += r.m(a * dt + t, c * dt + t);
  return DensityMatrix(kd, out);
}

DensityMatrix reduced(const StateVector& psi, const SubsystemSet& kept) {
  const int n = psi.n();
  check_subset(kept, n);
  SubsystemSet traced = complement(kept, n);
  if (kept.empty()) {
    Mat one(1, 1);
    one(0, 0) = psi.amps.squaredNorm();
    return DensityMatrix(Dims{1}, one);
  }
  std::vector<int> order = kept;
  order.insert(order.end(), traced.begin(), traced.end());
  StateVector r = reorder(psi, order);
  Dims kd;
  for (int j : kept) kd.push_back(psi.dims[j]);
  const long dk = total_dim(kd);
  const long dt = total_dim(psi.dims) / dk;
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> A(
      r.amps.data(), dk, dt);
  return DensityMatrix(kd, A * A.adjoint());
}

DensityMatrix reduced(const DensityMatrix& rho, const SubsystemSet& kept) {
  check_subset(kept, rho.n());
  SubsystemSet srt = kept;
  DensityMatrix r = partial_trace(rho, complement(kept, rho.n()));
  // partial_trace keeps ascending order; honour the requested order
  std::vector<int> pos(kept.size());
  std::sort(srt.begin(), srt.end());
  for (size_t i = 0; i < kept.size(); ++i)
    pos[i] = static_cast<int>(std::find(srt.begin(), srt.end(), kept[i]) - srt.begin());
  bool ident = true;
  for (size_t i = 0; i < pos.size(); ++i) ident = ident && pos[i] == static_cast<int>(i);
  return ident ? r : reorder(r, pos);
}

DensityMatrix partial_transpose(const DensityMatrix& rho, const SubsystemSet& on) {
  const int n = rho.n();
  check_subset(on, n);
  const long D = total_dim(rho.dims);
  if (on.empty()) return rho;
  // split every index into its flipped and kept parts
  std::vector<long> stride(n);
  long s = 1;
  for (int j = n - 1; j >= 0; --j) {
    stride[j] = s;
    s *= rho.dims[j];
  }
  std::vector<long> fpart(D, 0);
  for (long i = 0; i < D; ++i) {
    for (int j : on) fpart[i] += ((i / stride[j]) % rho.dims[j]) * stride[j];
  }
  Mat out(D, D);
  for (long c = 0; c < D; ++c)
    for (long r = 0; r < D; ++r) {
      long nr = r - fpart[r] + fpart[c];
      long nc = c - fpart[c] + fpart[r];
      out(nr, nc) = rho.m(r, c);
    }
  return DensityMatrix(rho.dims, out);
}

Mat permute_slots(const Mat& data, const std::vector<int>& slot_dims,
                  const std::vector<int>& sigma, int nrow_out,
                  std::vector<int>* out_slot_dims) {
  const int S = static_cast<int>(slot_dims.size());
  if (static_cast<int>(sigma.size()) != S) throw StateError("malformed slot permutation");
  std::vector<int> seen(S, 0);
  for (int k : sigma) {
    if (k < 0 || k >= S || seen[k]) throw StateError("malformed slot permutation");
    seen[k] = 1;
  }
  // input is data(row, col) with the first S_in_row slots on rows
  long total = 1;
  for (int d : slot_dims) total *= d;
  if (data.size() != total) throw StateError("slot dims do not match data size");
  long in_rows = data.rows();
  std::vector<int> od(S);
  for (int k = 0; k < S; ++k) od[k] = slot_dims[sigma[k]];
  long out_rows = 1;
  for (int k = 0; k < nrow_out; ++k) out_rows *= od[k];
  long out_cols = total / out_rows;
  Mat out(out_rows, out_cols);
  std::vector<long> in_stride(S);
  {
    long s = 1;
    for (int k = S - 1; k >= 0; --k) {
      in_stride[k] = s;
      s *= slot_dims[k];
    }
  }
  std::vector<int> dg(S, 0);
  for (long idx = 0; idx < total; ++idx) {
    long in_lin = 0;
    for (int k = 0; k < S; ++k) in_lin += dg[k] * in_stride[sigma[k]];
    out(idx / out_cols, idx % out_cols) = data(in_lin / (total / in_rows), in_lin % (total / in_rows));
    for (int k = S - 1; k >= 0; --k) {
      if (++dg[k] < od[k]) break;
      dg[k] = 0;
    }
  }
  if (out_slot_dims) *out_slot_dims = od;
  return out;
}

Mat permute_systems(const DensityMatrix& rho, const std::vector<int>& sigma) {
  std::vector<int> sd = rho.dims;
  sd.insert(sd.end(), rho.dims.begin(), rho.dims.end());
  return permute_slots(rho.m, sd, sigma, rho.n());
}

Mat realign(const DensityMatrix& rho, const SubsystemSet& cut) {
  const int n = rho.n();
  check_subset(cut, n);
  SubsystemSet rest = complement(cut, n);
  if (cut.empty() || rest.empty()) throw StateError("realignment needs a proper cut");
  std::vector<int> order = cut;
  order.insert(order.end(), rest.begin(), rest.end());
  DensityMatrix r = reorder(rho, order);
  int dA = static_cast<int>(total_dim(r.dims) / total_dim(Dims(r.dims.begin() + cut.size(), r.dims.end())));
  int dB = static_cast<int>(total_dim(r.dims) / dA);
  // slots (a, b, a', b') -> rows (a, a'), columns (b, b')
  return permute_slots(r.m, {dA, dB, dA, dB}, {0, 2, 1, 3}, 2);
}

Mat pauli(int k) {
  Mat p(2, 2);
  const cplx I(0, 1);
  switch (k) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -I, I, 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: throw StateError("pauli index must be 0..3");
  }
  return p;
}

Mat epsilon2() {
  Mat e(2, 2);
  e << 0, 1, -1, 0;
  return e;
}

Mat local_op(const Dims& dims, int site, const Mat& op) {
  Mat r = Mat::Identity(1, 1);
  for (int j = 0; j < static_cast<int>(dims.size()); ++j)
    r = kron(r, j == site ? op : Mat(Mat::Identity(dims[j], dims[j])));
  return r;
}

namespace {
Mat sy_all(int n) {
  Mat r = Mat::Identity(1, 1);
  for (int j = 0; j < n; ++j) r = kron(r, pauli(2));
  return r;
}
void require_qubits(const Dims& dims) {
  for (int d : dims)
    if (d != 2) throw StateError("spin flip needs qubits");
}
}  // namespace

StateVector spin_flip(const StateVector& psi) {
  require_qubits(psi.dims);
  return StateVector(psi.dims, sy_all(psi.n()) * psi.amps.conjugate());
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
  require_qubits(rho.dims);
  Mat s = sy_all(rho.n());
  return DensityMatrix(rho.dims, s * rho.m.conjugate() * s);
}

Schmidt schmidt_decompose(const StateVector& psi, const SubsystemSet& cut) {
  const int n = psi.n();
  check_subset(cut, n);
  SubsystemSet rest = complement(cut, n);
  if (cut.empty() || rest.empty()) throw StateError("Schmidt decomposition needs a proper cut");
  std::vector<int> order = cut;
  order.insert(order.end(), rest.begin(), rest.end());
  StateVector r = reorder(psi, order);
  long dA = 1;
  for (int j : cut) dA *= psi.dims[j];
  long dB = total_dim(psi.dims) / dA;
  Mat A(dA, dB);
  for (long a = 0; a < dA; ++a)
    for (long b = 0; b < dB; ++b) A(a, b) = r.amps(a * dB + b);
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Schmidt s;
  s.coeffs = svd.singularValues();
  s.left = svd.matrixU();
  s.right = svd.matrixV().conjugate();
  return s;
}

RVec singular_values(const Mat& m) {
  if (m.rows() * m.cols() > 4096) {
    Eigen::BDCSVD<Mat> svd(m);
    return svd.singularValues();
  }
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues();
}

double trace_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m).sum();
}

Mat hermitize(const Mat& h) {
  if (h.rows() != h.cols()) throw StateError("Hermitian input must be square");
  double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (asym > kHermTol * scale) throw StateError("matrix is not Hermitian");
  return (h + h.adjoint()) * 0.5;
}

void herm_eigen(const Mat& h, RVec& vals, Mat& vecs) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(h));
  const Eigen::Index D = h.rows();
  vals.resize(D);
  vecs.resize(D, D);
  for (Eigen::Index i = 0; i < D; ++i) {
    vals(i) = es.eigenvalues()(D - 1 - i);
    vecs.col(i) = es.eigenvectors().col(D - 1 - i);
  }
}

RVec herm_spectrum(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(h), Eigen::EigenvaluesOnly);
  RVec ev = es.eigenvalues();
  return ev.reverse();
}

RVec herm_spectrum(const DensityMatrix& rho) { return herm_spectrum(rho.m); }

}  // namespace entanglia
