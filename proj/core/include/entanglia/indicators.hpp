#pragma once

#include <string>
#include <vector>

#include "entanglia/lattice.hpp"
#include "entanglia/mixedness.hpp"
#include "entanglia/tensor.hpp"

namespace entanglia {

enum class Combine { SumProduct, MeanGeometric };

struct IndicatorSpec {
  Label label;
  EntropyFamily base = EntropyFamily::tsallis(2.0);
  Combine combine = Combine::SumProduct;

  std::string str() const;
};

// F(pi_K) for a block K of subsystems (0-based).
double block_entropy(const StateVector& psi, const std::vector<int>& block, const EntropyFamily& f);

// Sum over blocks per partition, product over partitions.
double pure_indicator(const StateVector& psi, const IndicatorSpec& spec);
// Mean over blocks per partition, geometric mean over partitions.  Throws
// std::invalid_argument for a base entropy that is not concave.
double monotone_indicator(const StateVector& psi, const IndicatorSpec& spec);
bool concave_base(const EntropyFamily& f);
// Dispatches on spec.combine.
double indicator(const StateVector& psi, const IndicatorSpec& spec);

// The eight tripartite labels, in the column order of the class table:
// 1|2|3, 1|23, 2|13, 3|12, 2|13+3|12, 1|23+3|12, 1|23+2|13, 1|23+2|13+3|12.
const std::vector<Label>& tripartite_indicator_labels();

}  // namespace entanglia
