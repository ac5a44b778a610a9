#pragma once

#include <cmath>

#include "entanglia/tensor.hpp"

namespace entanglia {

// Mixture d I/8 + g GHZ + w W of three qubits.
struct SimplexPoint {
  double g = 0, w = 0;

  // round-off on the d = 0 edge would otherwise reach sqrt(d) terms
  double d() const {
    double r = 1.0 - g - w;
    return std::abs(r) < 1e-14 ? 0.0 : r;
  }
  double dt() const { return d() / 8.0; }
  double gt() const { return g / 2.0; }
  double wt() const { return w / 3.0; }
  void validate() const;  // throws std::invalid_argument outside the simplex
};

DensityMatrix build_ghzw(const SimplexPoint& p);

// Closed forms on the family.  Every entry is a margin: >= 0 where the
// corresponding condition holds.
struct GhzwClosedForms {
  double ppt_det;    // 2x2 block determinant of rho^{t1} on {011,100}
  double ppt1_poly;  // 576 * ppt_det
  double ppt_block3; // d(d+g) - 2w^2 from the 3x3 block
  double ppt2_poly;  // 576 * ppt_block3
  double red3_poly;
  double red4_poly;
  double wootters_poly;  // >= 0 iff rho_23 is entangled
  double wootters23;     // closed-form concurrence of rho_23
  double su21_poly;      // 2-separability, setting I
  double su22_poly;      // 2-separability, setting II
  double su283_1;        // all bipartitions, setting I
  double su283_2;        // all bipartitions, setting II (polynomial form)
  double gs2_2;          // biseparability from matrix elements
  double gs3_2;
  double gs3_11;         // ((d+g) d^3)^{1/4} - g
  double wit_ghz, wit_w1, wit_w2;
  double maj_line;       // 3/11 - 3g/11 - w
};
GhzwClosedForms ghzw_closed_forms(const SimplexPoint& p);

// On the d = 0 edge the roof of the three-tangle vanishes up to g0.  Mixing
// with noise keeps it zero, so GHZ-class points lie strictly below the line
// through the origin and (g0, 1 - g0).
inline double tau_bar_line_w(double g) { return 3.0 * g / (4.0 * std::cbrt(2.0)); }
inline double tau_bar_g0() {
  const double c = 4.0 * std::cbrt(2.0);
  return c / (3.0 + c);
}

}  // namespace entanglia
