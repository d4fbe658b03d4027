#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace smellscope {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const noexcept { return tp + fp + tn + fn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct ClassificationScores {
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
};

// Zero denominators yield 0.
ClassificationScores confusion_metrics(const ConfusionCounts& c);
double f_measure(double precision, double recall);

// Mann-Whitney estimate with ties counted as one half. Throws UndefinedMetricError when
// only one label is present and ContractViolation on a size mismatch.
double auc_roc(const std::vector<double>& scores, const std::vector<bool>& labels);

// (#{a > b} - #{a < b}) / (|a| |b|). Throws ContractViolation on an empty sample.
double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b);

double mean(const std::vector<double>& v);
// Sample standard deviation (n - 1); 0 for fewer than two values.
double stddev(const std::vector<double>& v);
// Moment coefficient of skewness; 0 for a constant sample.
double skewness(const std::vector<double>& v);
// Linear interpolation between order statistics (type 7). Throws ContractViolation when empty.
double quantile(std::vector<double> v, double q);

struct OverlapResult {
  double both = 0;
  double only_a = 0;
  double only_b = 0;
};

// Percentages of the union of two true-positive sets. Throws ContractViolation when a set
// is not contained in the universe.
OverlapResult overlap_analysis(const std::set<std::string>& tp_a, const std::set<std::string>& tp_b,
                               const std::set<std::string>& universe);

}  // namespace smellscope
