#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smellscope/dataset/dataset.hpp"

namespace smellscope {

struct LogisticModel {
  std::vector<std::string> features;
  std::vector<double> coefficients;  // on standardized features
  double intercept = 0;
  double lambda = 1.0;
  std::vector<double> means;
  std::vector<double> scales;  // population standard deviation, 1 for constant features
  std::uint64_t seed = 0;
  int iterations = 0;
  bool converged = false;
};

struct LogisticOptions {
  double lambda = 1.0;
  double tolerance = 1e-8;
  int max_iterations = 10000;
};

// Row-major design matrix with boolean targets. Throws DegenerateTrainingError when only
// one label is present.
LogisticModel train_logistic(const std::vector<std::vector<double>>& x, const std::vector<bool>& y,
                             const std::vector<std::string>& features, const LogisticOptions& options = {});

// The solver is deterministic; the seed is recorded for provenance only.
LogisticModel train_logistic(const Dataset& d, double lambda = 1.0, std::uint64_t seed = 0);

// Row values aligned with model.features. Throws ContractViolation on a size mismatch.
double predict(const LogisticModel& m, const std::vector<double>& row);
// Throws ContractViolation when a model feature is missing from the row.
double predict(const LogisticModel& m, const std::map<std::string, double>& row);

// Penalized log-likelihood on standardized inputs, used by the solver and by tests.
double penalized_log_likelihood(const std::vector<std::vector<double>>& z, const std::vector<bool>& y,
                                double intercept, const std::vector<double>& coefficients, double lambda);

}  // namespace smellscope
