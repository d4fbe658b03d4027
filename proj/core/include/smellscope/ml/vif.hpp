#pragma once

#include <string>
#include <vector>

#include "smellscope/dataset/dataset.hpp"

namespace smellscope {

// 1 / (1 - R^2) of each column regressed on the others with an intercept. Constant columns
// and fits with R^2 >= 1 - 1e-10 give +infinity.
std::vector<double> variance_inflation_factors(const std::vector<std::vector<double>>& columns);

struct VifResult {
  Dataset dataset;
  std::vector<std::string> removed;  // in removal order
};

// Removes the largest-VIF feature while any VIF exceeds `threshold`; ties remove the
// alphabetically later feature. The last feature is never removed.
// Throws ContractViolation when there are fewer rows than features + 1.
VifResult vif_filter(const Dataset& d, double threshold = 10.0);

}  // namespace smellscope
