#include "entanglia/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entanglia {

double CriterionVerdict::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (double x : margins) m = std::min(m, x);
  return m;
}

CriterionVerdict CriterionVerdict::make(std::string id, std::vector<double> margins, double tol) {
  CriterionVerdict v;
  v.id = std::move(id);
  v.margins = std::move(margins);
  v.holds = v.margins.empty() || v.min_margin() >= -tol;
  return v;
}

Mat embed(const Mat& op, const Dims& dims, const SubsystemSet& on) {
  const int n = static_cast<int>(dims.size());
  SubsystemSet rest = complement(on, n);
  long dr = 1;
  for (int j : rest) dr *= dims[j];
  Mat big = kron(op, Mat(Mat::Identity(dr, dr)));
  std::vector<int> order = on;
  order.insert(order.end(), rest.begin(), rest.end());
  Dims od;
  for (int j : order) od.push_back(dims[j]);
  // big is written in `order`; move factors back to 0..n-1
  std::vector<int> inv(n);
  for (int j = 0; j < n; ++j) inv[order[j]] = j;
  return reorder(DensityMatrix(od, big), inv).m;
}

namespace {
void check_cut(const DensityMatrix& rho, const SubsystemSet& cut) {
  if (cut.empty() || static_cast<int>(cut.size()) >= rho.n())
    throw StateError("bipartite criterion needs a proper cut");
}
}  // namespace

CriterionVerdict majorization_criterion(const DensityMatrix& rho, const SubsystemSet& cut) {
  check_cut(rho, cut);
  RVec p = herm_spectrum(rho);
  RVec qa = herm_spectrum(reduced(rho, cut));
  RVec qb = herm_spectrum(reduced(rho, complement(cut, rho.n())));
  RVec sa = majorization_slacks(p, qa);
  RVec sb = majorization_slacks(p, qb);
  std::vector<double> m(sa.data(), sa.data() + sa.size());
  m.insert(m.end(), sb.data(), sb.data() + sb.size());
  return CriterionVerdict::make("maj", m);
}

CriterionVerdict entropy_criterion(const DensityMatrix& rho, const SubsystemSet& cut,
                                   const EntropyFamily& fam) {
  check_cut(rho, cut);
  double s = entropy(rho, fam);
  double sa = entropy(reduced(rho, cut), fam);
  double sb = entropy(reduced(rho, complement(cut, rho.n())), fam);
  return CriterionVerdict::make("entropy[" + to_string(fam) + "]", {s - sa, s - sb});
}

PptResult ppt_criterion(const DensityMatrix& rho, const SubsystemSet& cut) {
  check_cut(rho, cut);
  Mat pt = partial_transpose(rho, cut).m;
  RVec ev = herm_spectrum(pt);
  double tn = ev.cwiseAbs().sum();
  PptResult r;
  r.spectrum = ev;
  r.negativity = std::max(0.0, tn / std::abs(rho.m.trace().real()) - 1.0);
  r.verdict = CriterionVerdict::make("ppt", {ev(ev.size() - 1)});
  return r;
}

double negativity(const DensityMatrix& rho, const SubsystemSet& cut) {
  return ppt_criterion(rho, cut).negativity;
}

CriterionVerdict reduction_criterion(const DensityMatrix& rho, const SubsystemSet& cut) {
  check_cut(rho, cut);
  SubsystemSet rest = complement(cut, rho.n());
  Mat a = embed(reduced(rho, cut).m, rho.dims, cut) - rho.m;
  Mat b = embed(reduced(rho, rest).m, rho.dims, rest) - rho.m;
  RVec ea = herm_spectrum(a);
  RVec eb = herm_spectrum(b);
  return CriterionVerdict::make("red", {ea(ea.size() - 1), eb(eb.size() - 1)});
}

CriterionVerdict reshuffling_criterion(const DensityMatrix& rho, const SubsystemSet& cut) {
  check_cut(rho, cut);
  return CriterionVerdict::make("ccnr", {1.0 - trace_norm(realign(rho, cut))});
}

}  // namespace entanglia
