#pragma once

#include "entanglia/tensor.hpp"

namespace entanglia {

enum class EntropyKind { VonNeumann, Renyi, Tsallis, Hartley, Chebyshev };

struct EntropyFamily {
  EntropyKind kind = EntropyKind::VonNeumann;
  double q = 1.0;  // used by Renyi and Tsallis only

  static EntropyFamily von_neumann() { return {EntropyKind::VonNeumann, 1.0}; }
  static EntropyFamily renyi(double q) { return {EntropyKind::Renyi, q}; }
  static EntropyFamily tsallis(double q) { return {EntropyKind::Tsallis, q}; }
  static EntropyFamily hartley() { return {EntropyKind::Hartley, 0.0}; }
  static EntropyFamily chebyshev() { return {EntropyKind::Chebyshev, 0.0}; }
};

constexpr double kRankTol = 1e-9;

std::string to_string(const EntropyFamily& f);
EntropyFamily parse_entropy(const std::string& s);

// Entropy of a probability vector, natural log.  Entries are clipped to [0,1].
double entropy(const RVec& p, const EntropyFamily& fam);
double entropy(const DensityMatrix& rho, const EntropyFamily& fam);
double entropy_bits(const DensityMatrix& rho, const EntropyFamily& fam);
double binary_entropy(double x);  // base 2

struct PurityStats {
  double purity;
  double participation_ratio;
  double concurrence_squared;
};
PurityStats purity_stats(const DensityMatrix& rho);

enum class Majorization { FirstMajorized, SecondMajorized, Equal, Incomparable };
const char* to_string(Majorization m);

// FirstMajorized means p is majorized by q (p more mixed).
Majorization majorizes(const RVec& p, const RVec& q, double tol = 1e-12);
// partial-sum slacks sum_{i<=k} q_i - sum_{i<=k} p_i, sorted descending
RVec majorization_slacks(const RVec& p, const RVec& q);

}  // namespace entanglia
