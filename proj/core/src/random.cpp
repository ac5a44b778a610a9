#include "entanglia/random.hpp"

#include <cmath>

namespace entanglia {

Vec random_gaussian_vec(long n, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec v(n);
  for (long i = 0; i < n; ++i) v(i) = cplx(nd(rng), nd(rng));
  return v;
}

Mat random_ginibre(long rows, long cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat g(rows, cols);
  for (long c = 0; c < cols; ++c)
    for (long r = 0; r < rows; ++r) g(r, c) = cplx(nd(rng), nd(rng));
  return g;
}

StateVector random_state(const Dims& dims, Rng& rng) {
  Vec v = random_gaussian_vec(total_dim(dims), rng);
  v.normalize();
  return StateVector(dims, v);
}

DensityMatrix random_density(const Dims& dims, Rng& rng, int rank) {
  long D = total_dim(dims);
  long k = (rank <= 0 || rank > D) ? D : rank;
  Mat g = random_ginibre(D, k, rng);
  Mat r = g * g.adjoint();
  r /= r.trace().real();
  return DensityMatrix(dims, (r + r.adjoint()) * 0.5);
}

Mat random_isometry(long m, long k, Rng& rng) {
  Mat g = random_ginibre(m, k, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(m, k);
  Mat r = qr.matrixQR().topLeftCorner(k, k);
  for (long j = 0; j < k; ++j) {
    cplx d = r(j, j);
    double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

Mat random_unitary(long d, Rng& rng) { return random_isometry(d, d, rng); }

Mat random_local_unitary(const Dims& dims, Rng& rng) {
  Mat u = Mat::Identity(1, 1);
  for (int d : dims) u = kron(u, random_unitary(d, rng));
  return u;
}

Mat random_local_invertible(const Dims& dims, Rng& rng) {
  Mat u = Mat::Identity(1, 1);
  for (int d : dims) {
    Mat g = random_ginibre(d, d, rng);
    u = kron(u, g);
  }
  return u;
}

}  // namespace entanglia
