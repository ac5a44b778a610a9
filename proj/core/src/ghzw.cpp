#include "entanglia/ghzw.hpp"

#include <algorithm>
#include <stdexcept>

namespace entanglia {

void SimplexPoint::validate() const {
  const double tol = 1e-12;
  if (!(g >= -tol && w >= -tol && g + w <= 1.0 + tol))
    throw std::invalid_argument("point outside the simplex");
}

DensityMatrix build_ghzw(const SimplexPoint& p) {
  p.validate();
  Mat m = Mat::Identity(8, 8) * p.dt();
  // GHZ on |000>, |111>
  m(0, 0) += p.gt();
  m(7, 7) += p.gt();
  m(0, 7) += p.gt();
  m(7, 0) += p.gt();
  // W on |001>, |010>, |100>
  const int wi[3] = {1, 2, 4};
  for (int a : wi)
    for (int b : wi) m(a, b) += p.wt();
  return DensityMatrix({2, 2, 2}, m);
}

GhzwClosedForms ghzw_closed_forms(const SimplexPoint& p) {
  const double g = p.g, w = p.w;
  const double d = p.dt(), gt = p.gt(), wt = p.wt();
  GhzwClosedForms c;
  c.ppt_det = d * (d + wt) - gt * gt;
  c.ppt1_poly = -135 * g * g - 15 * w * w - 6 * g * w - 18 * g + 6 * w + 9;
  c.ppt_block3 = d * d + d * gt - 2 * wt * wt;
  c.ppt2_poly = -27 * g * g - 119 * w * w - 18 * g * w + 18 * g - 18 * w + 9;
  c.red3_poly = -63 * g * g - 7 * w * w - 54 * g * w - 162 * g + 54 * w + 81;
  c.red4_poly = 3 * g - (9 + 8 * std::sqrt(2.0)) * w + 9;
  c.wootters_poly = -9 * g * g + 19 * w * w + 6 * g * w - 18 * g + 6 * w - 9;
  const double prod = std::max(0.0, (1 + g - w) * (3 + 3 * g + w));
  c.wootters23 = std::max(0.0, 2.0 / 3.0 * w - std::sqrt(prod) / (2.0 * std::sqrt(3.0)));
  c.su21_poly = -7 * g * g - 6 * g * w - 15 * w * w - 18 * g + 6 * w + 9;
  c.su22_poly = -9 * g * g - 5 * w * w - 12 * w + 9;
  c.su283_1 = c.ppt_det;
  c.su283_2 = -9 * g * g - 77 * w * w - 12 * w + 9;
  const double root = std::sqrt(std::max(0.0, (d + gt) * d));
  c.gs2_2 = root + (d + wt) / 2 - wt;
  c.gs3_2 = root - wt;
  c.gs3_11 = std::pow(std::max(0.0, (d + gt) * d * d * d), 0.25) - gt;
  c.wit_ghz = (5 - 7 * g + w) / 8;
  c.wit_w1 = (13 + 3 * g - 21 * w) / 24;
  c.wit_w2 = (3 - 7 * g + w) / 8;
  c.maj_line = 3.0 / 11 - 3.0 * g / 11 - w;
  return c;
}

}  // namespace entanglia
