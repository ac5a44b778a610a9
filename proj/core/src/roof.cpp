#include "entanglia/roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entanglia/parallel.hpp"
#include "entanglia/random.hpp"

namespace entanglia {

namespace {

struct Problem {
  Dims dims;
  Mat V;  // D x k, columns sqrt(lambda_i) e_i
  const PureFunctional* f;
  double h;

  double member(const Vec& x) const {
    const double p = x.squaredNorm();
    if (p < 1e-300) return 0.0;
    return p * (*f)(StateVector(dims, x / std::sqrt(p)));
  }

  double value(const Mat& U) const {
    Mat P = V * U.transpose();
    double s = 0.0;
    for (long j = 0; j < P.cols(); ++j) s += member(P.col(j));
    return s;
  }

  // Euclidean gradient w.r.t. U, encoded as d/dRe + i d/dIm.
  Mat egrad(const Mat& U) const {
    Mat P = V * U.transpose();
    const long D = P.rows(), m = P.cols();
    Mat G(D, m);
    for (long j = 0; j < m; ++j) {
      Vec x = P.col(j);
      for (long c = 0; c < D; ++c) {
        const cplx x0 = x(c);
        x(c) = x0 + h;
        double fp = member(x);
        x(c) = x0 - h;
        double fm = member(x);
        x(c) = x0 + cplx(0, h);
        double gp = member(x);
        x(c) = x0 - cplx(0, h);
        double gm = member(x);
        x(c) = x0;
        G(c, j) = cplx((fp - fm) / (2 * h), (gp - gm) / (2 * h));
      }
    }
    return (V.adjoint() * G).transpose();
  }
};

Mat qf(const Mat& Y) {
  Eigen::HouseholderQR<Mat> qr(Y);
  Mat Q = qr.householderQ() * Mat::Identity(Y.rows(), Y.cols());
  Mat R = qr.matrixQR().topRows(Y.cols()).triangularView<Eigen::Upper>();
  for (long i = 0; i < Y.cols(); ++i) {
    const double a = std::abs(R(i, i));
    if (a > 0) Q.col(i) *= R(i, i) / a;
  }
  return Q;
}

Mat riem_grad(const Mat& U, const Mat& E) {
  Mat A = U.adjoint() * E;
  return E - U * (0.5 * (A + A.adjoint()));
}

double inner(const Mat& a, const Mat& b) { return (a.adjoint() * b).trace().real(); }

struct Run {
  double value = std::numeric_limits<double>::infinity();
  Mat U;
  bool converged = false;
  int steps = 0;
};

Run descend(const Problem& pb, Mat U, const RoofOptions& opt) {
  Run r;
  double F = pb.value(U);
  Mat Uprev, Rprev;
  double alpha = 1.0;
  int stall = 0;
  int step = 0;
  for (; step < opt.max_steps; ++step) {
    if (F < opt.value_floor) {
      r.converged = true;
      break;
    }
    Mat R = riem_grad(U, pb.egrad(U));
    const double g2 = R.squaredNorm();
    if (std::sqrt(g2) < opt.grad_tol) {
      r.converged = true;
      break;
    }
    if (Uprev.size()) {
      Mat s = U - Uprev, y = R - Rprev;
      const double sy = inner(s, y);
      if (sy > 0) alpha = std::clamp(inner(s, s) / sy, 1e-8, 1e3);
      else alpha = std::min(1e3, alpha * 2);
    }
    // Armijo backtracking
    bool ok = false;
    Mat Un;
    double Fn = F;
    for (int bt = 0; bt < 60; ++bt) {
      Un = qf(U - alpha * R);
      Fn = pb.value(Un);
      if (Fn <= F - 1e-4 * alpha * g2) {
        ok = true;
        break;
      }
      alpha *= 0.5;
      if (alpha < 1e-16) break;
    }
    if (!ok) {
      // no descent along the gradient: numerically stationary
      r.converged = true;
      break;
    }
    stall = (F - Fn) < 1e-13 * std::max(1.0, F) ? stall + 1 : 0;
    Uprev = U;
    Rprev = R;
    U = Un;
    F = Fn;
    if (stall >= 20) {
      r.converged = true;
      break;
    }
  }
  r.value = F;
  r.U = U;
  r.steps = step;
  return r;
}

Mat hint_start(const Ensemble& e, const Mat& evecs, const RVec& lam, long m) {
  const long k = lam.size();
  const long mm = std::max<long>(m, static_cast<long>(e.vectors.size()));
  Mat U = Mat::Zero(mm, k);
  for (size_t j = 0; j < e.vectors.size(); ++j) {
    Vec phi = std::sqrt(std::max(0.0, e.weights[j])) * e.vectors[j].amps;
    for (long i = 0; i < k; ++i) U(j, i) = evecs.col(i).dot(phi) / std::sqrt(lam(i));
  }
  if ((U.adjoint() * U - Mat::Identity(k, k)).norm() > 1e-8) U = qf(U);
  return U;
}

}  // namespace

double ensemble_value(const Ensemble& e, const PureFunctional& f) {
  double s = 0.0;
  for (size_t j = 0; j < e.vectors.size(); ++j)
    if (e.weights[j] > 0) s += e.weights[j] * f(e.vectors[j]);
  return s;
}

double ensemble_residual(const DensityMatrix& rho, const Ensemble& e) {
  Mat r = rho.m;
  for (size_t j = 0; j < e.vectors.size(); ++j)
    r -= e.weights[j] * e.vectors[j].amps * e.vectors[j].amps.adjoint();
  return r.norm();
}

Ensemble result_ensemble(const RoofResult& r) { return Ensemble{r.weights, r.vectors}; }

RoofResult convex_roof(const DensityMatrix& rho, const PureFunctional& f, const RoofOptions& opt) {
  RVec vals;
  Mat vecs;
  herm_eigen(rho.m, vals, vecs);
  long k = 0;
  while (k < vals.size() && vals(k) > 1e-9) ++k;
  if (k == 0) throw StateError("convex roof of a zero operator");
  RVec lam = vals.head(k);
  Mat E = vecs.leftCols(k);

  RoofResult res;
  if (k == 1) {
    StateVector psi(rho.dims, E.col(0));
    res.value = lam(0) * f(psi);
    res.weights = {lam(0)};
    res.vectors = {psi};
    res.converged = true;
    return res;
  }

  Problem pb{rho.dims, E * lam.cwiseSqrt().asDiagonal(), &f, opt.fd_step};
  const long m = opt.ensemble_size > 0 ? std::max<long>(k, opt.ensemble_size) : k * k;
  const int nrand = std::max(0, opt.restarts);
  const int total = nrand + static_cast<int>(opt.hints.size());
  if (total == 0) throw std::invalid_argument("convex roof needs at least one start");
  std::vector<Run> runs(total);
  parallel_for(total, [&](long r) {
    Mat U0;
    if (r < nrand) {
      if (r == 0) {
        U0 = Mat::Zero(m, k);
        U0.topRows(k) = Mat::Identity(k, k);
      } else {
        std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(r)};
        Rng rng(seq);
        U0 = random_isometry(m, k, rng);
      }
    } else {
      U0 = hint_start(opt.hints[r - nrand], E, lam, m);
    }
    runs[r] = descend(pb, U0, opt);
  }, opt.max_workers);

  int best = 0;
  for (int r = 1; r < total; ++r)
    if (runs[r].value < runs[best].value) best = r;
  const Run& b = runs[best];
  Mat P = pb.V * b.U.transpose();
  double value = 0.0;
  for (long j = 0; j < P.cols(); ++j) {
    const double p = P.col(j).squaredNorm();
    if (p <= 0.0) continue;
    StateVector psi(rho.dims, P.col(j) / std::sqrt(p));
    value += p * f(psi);
    res.weights.push_back(p);
    res.vectors.push_back(std::move(psi));
  }
  res.value = value;
  res.restarts_used = total;
  res.converged = b.converged;
  res.steps = b.steps;
  res.best_restart = best;
  return res;
}

}  // namespace entanglia
