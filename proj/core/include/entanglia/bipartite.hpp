#pragma once

#include "entanglia/mixedness.hpp"
#include "entanglia/tensor.hpp"
#include "entanglia/verdict.hpp"

namespace entanglia {

// op acting on the subsystems `on` (in that order), padded with identities
// on the rest and returned in the natural subsystem order.
Mat embed(const Mat& op, const Dims& dims, const SubsystemSet& on);

CriterionVerdict majorization_criterion(const DensityMatrix& rho, const SubsystemSet& cut);
CriterionVerdict entropy_criterion(const DensityMatrix& rho, const SubsystemSet& cut,
                                   const EntropyFamily& fam);

struct PptResult {
  CriterionVerdict verdict;
  double negativity;
  RVec spectrum;  // of rho^{t_A}, descending
};
PptResult ppt_criterion(const DensityMatrix& rho, const SubsystemSet& cut);
double negativity(const DensityMatrix& rho, const SubsystemSet& cut);

CriterionVerdict reduction_criterion(const DensityMatrix& rho, const SubsystemSet& cut);
CriterionVerdict reshuffling_criterion(const DensityMatrix& rho, const SubsystemSet& cut);

}  // namespace entanglia
