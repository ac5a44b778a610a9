#include "entanglia/indicators.hpp"

#include <cmath>
#include <stdexcept>

namespace entanglia {

std::string IndicatorSpec::str() const {
  std::string s = label_str(label) + " [" + to_string(base);
  s += combine == Combine::SumProduct ? ", sum-product]" : ", mean-geometric]";
  return s;
}

double block_entropy(const StateVector& psi, const std::vector<int>& block, const EntropyFamily& f) {
  if (static_cast<int>(block.size()) == psi.n()) return 0.0;
  return entropy(reduced(psi, block), f);
}

namespace {
void check_spec(const StateVector& psi, const IndicatorSpec& spec) {
  if (spec.label.empty()) throw std::invalid_argument("empty label");
  for (auto& p : spec.label)
    if (p.n != psi.n()) throw std::invalid_argument("label does not match the number of subsystems");
}
}  // namespace

double pure_indicator(const StateVector& psi, const IndicatorSpec& spec) {
  check_spec(psi, spec);
  double prod = 1.0;
  for (auto& alpha : spec.label) {
    double sum = 0.0;
    for (auto& blk : alpha.blocks) sum += block_entropy(psi, blk, spec.base);
    prod *= sum;
  }
  return prod;
}

bool concave_base(const EntropyFamily& f) {
  switch (f.kind) {
    case EntropyKind::VonNeumann:
    case EntropyKind::Tsallis: return f.kind == EntropyKind::VonNeumann || f.q > 0;
    case EntropyKind::Renyi: return f.q > 0 && f.q <= 1.0;
    default: return false;
  }
}

double monotone_indicator(const StateVector& psi, const IndicatorSpec& spec) {
  check_spec(psi, spec);
  if (!concave_base(spec.base))
    throw std::invalid_argument("monotone indicator needs a concave base entropy, got " +
                                to_string(spec.base));
  double logsum = 0.0;
  for (auto& alpha : spec.label) {
    double sum = 0.0;
    for (auto& blk : alpha.blocks) sum += block_entropy(psi, blk, spec.base);
    double m = sum / alpha.size();
    if (m <= 0.0) return 0.0;
    logsum += std::log(m);
  }
  return std::exp(logsum / spec.label.size());
}

double indicator(const StateVector& psi, const IndicatorSpec& spec) {
  return spec.combine == Combine::SumProduct ? pure_indicator(psi, spec)
                                             : monotone_indicator(psi, spec);
}

const std::vector<Label>& tripartite_indicator_labels() {
  static const std::vector<Label> labels = [] {
    std::vector<Label> v;
    for (const char* s : {"1|2|3", "1|23", "2|13", "3|12", "2|13,3|12", "1|23,3|12", "1|23,2|13",
                          "1|23,2|13,3|12"})
      v.push_back(parse_label(s));
    return v;
  }();
  return labels;
}

}  // namespace entanglia
