#pragma once

#include <cmath>

#include <doctest.h>

#include "entanglia/random.hpp"
#include "entanglia/roof.hpp"
#include "entanglia/tensor.hpp"

namespace th {

using namespace entanglia;

inline StateVector bell() {
  Vec a = Vec::Zero(4);
  a(0) = a(3) = 1.0 / std::sqrt(2.0);
  return {{2, 2}, a};
}

inline StateVector ket(const Dims& dims, const std::vector<int>& digits) { return basis_state(dims, digits); }

inline StateVector qubit(cplx a, cplx b) {
  Vec v(2);
  v << a, b;
  return {{2}, v.normalized()};
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

inline RVec sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return Eigen::Map<RVec>(v.data(), static_cast<long>(v.size()));
}

inline double spectrum_gap(const RVec& a, std::vector<double> b) {
  RVec bb = sorted_desc(std::move(b));
  REQUIRE(a.size() == bb.size());
  return (a - bb).cwiseAbs().maxCoeff();
}

// |bit>_a tensor Bell on the other two qubits
inline StateVector site_bell(int a, int bit) {
  Vec v = Vec::Zero(8);
  for (int i = 0; i < 2; ++i) {
    int idx = 0;
    for (int q = 0; q < 3; ++q) idx = 2 * idx + (q == a ? bit : i);
    v(idx) = 1.0 / std::sqrt(2.0);
  }
  return {{2, 2, 2}, v};
}

inline Ensemble mixture(const std::vector<double>& w, const std::vector<StateVector>& v) { return {w, v}; }

inline DensityMatrix density_of(const Ensemble& e) {
  Mat m = Mat::Zero(e.vectors[0].amps.size(), e.vectors[0].amps.size());
  for (size_t i = 0; i < e.vectors.size(); ++i) m += e.weights[i] * e.vectors[i].amps * e.vectors[i].amps.adjoint();
  return {e.vectors[0].dims, m};
}

}  // namespace th
