#include "entanglia/mixedness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entanglia {

std::string to_string(const EntropyFamily& f) {
  std::ostringstream os;
  switch (f.kind) {
    case EntropyKind::VonNeumann: return "vonneumann";
    case EntropyKind::Hartley: return "hartley";
    case EntropyKind::Chebyshev: return "chebyshev";
    case EntropyKind::Renyi: os << "renyi:" << f.q; return os.str();
    case EntropyKind::Tsallis: os << "tsallis:" << f.q; return os.str();
  }
  return "?";
}

EntropyFamily parse_entropy(const std::string& s) {
  auto colon = s.find(':');
  std::string name = s.substr(0, colon);
  double q = colon == std::string::npos ? 1.0 : std::stod(s.substr(colon + 1));
  if (name == "vonneumann" || name == "vn") return EntropyFamily::von_neumann();
  if (name == "hartley") return EntropyFamily::hartley();
  if (name == "chebyshev") return EntropyFamily::chebyshev();
  if (name == "renyi") return EntropyFamily::renyi(q);
  if (name == "tsallis") return EntropyFamily::tsallis(q);
  throw std::invalid_argument("unknown entropy family: " + s);
}

namespace {
double clip01(double x) { return std::min(1.0, std::max(0.0, x)); }

double shannon(const RVec& p) {
  double h = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double x = clip01(p(i));
    if (x > 0) h -= x * std::log(x);
  }
  return h;
}

double power_sum(const RVec& p, double q) {
  double s = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double x = clip01(p(i));
    if (x > 0) s += std::pow(x, q);
  }
  return s;
}
}  // namespace

double entropy(const RVec& p, const EntropyFamily& fam) {
  switch (fam.kind) {
    case EntropyKind::VonNeumann:
      return shannon(p);
    case EntropyKind::Hartley: {
      int r = 0;
      for (Eigen::Index i = 0; i < p.size(); ++i) r += p(i) > kRankTol;
      return r > 0 ? std::log(static_cast<double>(r)) : 0.0;
    }
    case EntropyKind::Chebyshev: {
      double mx = 0;
      for (Eigen::Index i = 0; i < p.size(); ++i) mx = std::max(mx, clip01(p(i)));
      return mx > 0 ? -std::log(mx) : 0.0;
    }
    case EntropyKind::Renyi:
      if (fam.q <= 0) throw std::invalid_argument("entropy parameter q must be positive");
      if (fam.q == 1.0) return shannon(p);
      return std::max(0.0, std::log(power_sum(p, fam.q)) / (1.0 - fam.q));
    case EntropyKind::Tsallis:
      if (fam.q <= 0) throw std::invalid_argument("entropy parameter q must be positive");
      if (fam.q == 1.0) return shannon(p);
      return std::max(0.0, (power_sum(p, fam.q) - 1.0) / (1.0 - fam.q));
  }
  return 0.0;
}

double entropy(const DensityMatrix& rho, const EntropyFamily& fam) {
  RVec p = herm_spectrum(rho);
  // eigensolver noise near zero blows up under x^q with q < 1
  double cut = 1e-13 * std::max(1.0, p.maxCoeff());
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) < cut) p(i) = 0;
  return entropy(p, fam);
}

double entropy_bits(const DensityMatrix& rho, const EntropyFamily& fam) {
  return entropy(rho, fam) / std::log(2.0);
}

double binary_entropy(double x) {
  auto t = [](double y) { return y > 0 ? -y * std::log2(y) : 0.0; };
  x = clip01(x);
  return t(x) + t(1.0 - x);
}

PurityStats purity_stats(const DensityMatrix& rho) {
  double P = (rho.m * rho.m).trace().real();
  double d = static_cast<double>(rho.m.rows());
  double c2 = d > 1 ? d / (d - 1.0) * (1.0 - P) : 0.0;
  return {P, 1.0 / P, std::min(1.0, std::max(0.0, c2))};
}

const char* to_string(Majorization m) {
  switch (m) {
    case Majorization::FirstMajorized: return "first-majorized";
    case Majorization::SecondMajorized: return "second-majorized";
    case Majorization::Equal: return "equal";
    case Majorization::Incomparable: return "incomparable";
  }
  return "?";
}

RVec majorization_slacks(const RVec& p, const RVec& q) {
  Eigen::Index n = std::max(p.size(), q.size());
  std::vector<double> a(n, 0.0), b(n, 0.0);
  for (Eigen::Index i = 0; i < p.size(); ++i) a[i] = p(i);
  for (Eigen::Index i = 0; i < q.size(); ++i) b[i] = q(i);
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  RVec s(n);
  double sa = 0, sb = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    sa += a[k];
    sb += b[k];
    s(k) = sb - sa;
  }
  return s;
}

Majorization majorizes(const RVec& p, const RVec& q, double tol) {
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) < -1e-12) throw std::invalid_argument("negative probability");
  for (Eigen::Index i = 0; i < q.size(); ++i)
    if (q(i) < -1e-12) throw std::invalid_argument("negative probability");
  RVec s = majorization_slacks(p, q);
  bool pq = true, qp = true;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) < -tol) pq = false;
    if (s(k) > tol) qp = false;
  }
  if (pq && qp) return Majorization::Equal;
  if (pq) return Majorization::FirstMajorized;
  if (qp) return Majorization::SecondMajorized;
  return Majorization::Incomparable;
}

}  // namespace entanglia
