#pragma once

#include <map>
#include <string>
#include <vector>

namespace smellscope {

struct ScottKnottOptions {
  double alpha = 0.05;
  double negligible_delta = 0.147;
  bool merge_negligible = true;
  // Samples are log1p-transformed when any group's skewness exceeds this.
  double skew_threshold = 1.0;
};

// Clusters of group names, best mean first. Each group needs at least two observations
// (ContractViolation otherwise); fewer than two groups yield a single cluster.
std::vector<std::vector<std::string>> scott_knott_esd(const std::map<std::string, std::vector<double>>& groups,
                                                      const ScottKnottOptions& options = {});

}  // namespace smellscope
