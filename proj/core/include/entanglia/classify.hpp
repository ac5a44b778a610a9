#pragma once

#include <array>
#include <string>
#include <vector>

#include "entanglia/indicators.hpp"
#include "entanglia/roof.hpp"

namespace entanglia {

enum class Zeroness { Zero, NonZero, Unknown };
const char* to_string(Zeroness z);

struct IndicatorEntry {
  std::string label;
  Zeroness verdict = Zeroness::Unknown;
  std::string source;  // "roof", "hint", "shortcut:...", "implied"
  bool roof_run = false;
  RoofResult roof;     // valid when roof_run
};

struct ClassifyOptions {
  RoofOptions roof;
  double eps = 1e-6;  // a roof below eps counts as vanishing
  bool shortcuts = true;
  bool run_roofs = true;
  // Known decompositions of rho.  A column vanishes when every member of one
  // hint has a vanishing pure indicator.
  std::vector<Ensemble> hints;
  EntropyFamily base = EntropyFamily::tsallis(2.0);
};

struct ClassifyResult {
  std::string class_name;  // "undecided" when no unique row matches
  std::vector<IndicatorEntry> profile;
  std::vector<std::string> candidates;
};

// Rows as 0/1 per column: f_{1|2|3}, f_{a|bc} x3, pairs x3, f_{2-sep}.
const std::vector<std::pair<std::string, std::array<int, 8>>>& ps_table();
// As ps_table with the extra tau^2 column; the last two rows are W and GHZ.
const std::vector<std::pair<std::string, std::array<int, 9>>>& pss_table();

std::vector<std::string> match_ps(const std::vector<Zeroness>& cols);
std::vector<std::string> match_pss(const std::vector<Zeroness>& cols);

// Tripartite, any local dimensions.
ClassifyResult classify_ps(const DensityMatrix& rho, const ClassifyOptions& opt = {});
// Three qubits, with the FTS invariants as pure functionals.
ClassifyResult classify_pss(const DensityMatrix& rho, const ClassifyOptions& opt = {});

// Classification of a pure vector from the pure indicators (no roofs).
std::string classify_ps_pure(const StateVector& psi, double eps = 1e-6,
                             const EntropyFamily& base = EntropyFamily::tsallis(2.0));

}  // namespace entanglia
