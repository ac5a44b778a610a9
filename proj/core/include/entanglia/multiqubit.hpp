#pragma once

#include <array>
#include <string>
#include <vector>

#include "entanglia/tensor.hpp"
#include "entanglia/verdict.hpp"

namespace entanglia {

struct SpinTriple {
  Mat X, Y, Z;
};

// One (X, Y, Z) triple per subsystem.
struct SpinSetting {
  std::vector<SpinTriple> sites;

  static SpinSetting uniform(int n, const SpinTriple& t);
  static SpinSetting setting_I(int n = 3);    // (s1, s2, s3)
  static SpinSetting setting_II(int n = 3);   // (s2, s3, s1)
  static SpinSetting setting_III(int n = 3);  // (s3, s1, s2)
  // Orthogonality and involution checks; throws StateError on failure.
  void validate() const;
};

// Indexed observable family built by the two-level recursion; x = 0..2^(n-1)-1.
struct SuOperators {
  std::vector<Mat> X, Y, Z, I;
};
SuOperators su_operators(const SpinSetting& setting);

struct SuVerdicts {
  CriterionVerdict bisep;    // 2-separable
  CriterionVerdict all_bipartitions;  // intersection over bipartitions
  CriterionVerdict fullsep;  // 3-separable
};
SuVerdicts su_criteria(const DensityMatrix& rho, const SpinSetting& setting);

// Matrix-element criteria on the computational basis.  Diagonal variants of
// the full-separability test are listed by exponent vector over |000>..|111>.
struct GsVariant {
  std::string id;
  std::array<int, 8> exponents;
  int root;
};
const std::vector<GsVariant>& gs_full_sep_variants();
std::vector<CriterionVerdict> gs_matrix_criteria(const DensityMatrix& rho);
CriterionVerdict gs_criterion(const DensityMatrix& rho, const std::string& id);

// phi must be a product vector on 2n subsystems (two copies).
CriterionVerdict gabriel_criterion(const DensityMatrix& rho, int k, const StateVector& phi);
StateVector phi_ghz(int n = 3);  // |0..0>|1..1>
StateVector phi_w(int n = 3);    // Hadamard on every slot

// Slot permutations of the six inequivalent tripartite permutation tests.
// Entries are 0-based; output slot k carries input slot sigma[k].
const std::vector<std::pair<std::string, std::vector<int>>>& tripartite_permutations();
std::vector<CriterionVerdict> permutation_criterion(const DensityMatrix& rho);

StateVector ghz_state(int n = 3);
StateVector w_state(int n = 3);
std::vector<CriterionVerdict> witness_criteria(const DensityMatrix& rho);

}  // namespace entanglia
