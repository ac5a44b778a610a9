#pragma once

#include <string>
#include <vector>

#include "entanglia/ghzw.hpp"

namespace entanglia {

// Known names: ppt gs su1 su2 maj red ccnr perm wit wootters
const std::vector<std::string>& scan_criteria_names();

struct ScanOptions {
  int res = 100;  // grid step 1/res on both axes, at most 2000
  std::vector<std::string> criteria = {"ppt", "gs", "su1", "su2", "maj", "red", "ccnr", "wit",
                                       "wootters"};
  int max_workers = 0;
};

struct ScanTable {
  std::vector<std::string> columns;  // starts with g, w
  std::vector<std::vector<double>> rows;  // ordered by (g, w)
};

// Column names produced for one criterion.
std::vector<std::string> scan_columns(const std::string& criterion);
// One row of values for a single point, in scan_columns order.
std::vector<double> scan_point(const SimplexPoint& p, const std::vector<std::string>& criteria);

ScanTable scan_simplex(const ScanOptions& opt);

std::string scan_csv(const ScanTable& t, const ScanOptions& opt);
// Zero contours of the margin columns, drawn over the simplex triangle.
std::string scan_svg(const ScanTable& t, const ScanOptions& opt);

}  // namespace entanglia
