#pragma once

#include <string>
#include <vector>

namespace entanglia {

struct CriterionVerdict {
  std::string id;
  bool holds = true;
  // signed slack per inequality, positive means satisfied
  std::vector<double> margins;

  double min_margin() const;
  static CriterionVerdict make(std::string id, std::vector<double> margins, double tol = 1e-9);
};

}  // namespace entanglia
