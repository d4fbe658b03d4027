#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "smellscope/dataset/dataset.hpp"
#include "smellscope/ml/stats.hpp"

namespace smellscope {

// Uniform integer in [0, bound) by rejection sampling, identical on every platform.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded_draw(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// Fold index per row. Positives and negatives are shuffled separately and dealt round-robin,
// so every fold is within one instance of the global count of each label.
// Throws StratificationError when a label has fewer than k members.
std::vector<int> stratified_folds(const std::vector<bool>& labels, int k, std::uint64_t seed);

struct TrainTestSplit {
  const std::vector<std::vector<double>>& x_train;
  const std::vector<bool>& y_train;
  const std::vector<std::vector<double>>& x_test;
};

// Returns one positive-class probability per test row.
using Classifier = std::function<std::vector<double>(const TrainTestSplit&)>;

Classifier logistic_classifier(double lambda);

struct CvOptions {
  int k = 10;
  int repeats = 100;
  double lambda = 1.0;
  std::uint64_t base_seed = 0;
  int threads = 1;
  double threshold = 0.5;
};

struct FoldResult {
  int repeat = 0;
  int fold = 0;
  ConfusionCounts counts;
  ClassificationScores scores;
  double auc = 0;
};

struct EvaluationResult {
  std::string spec;
  std::string release;
  std::vector<std::string> features;
  std::vector<std::string> vif_removed;
  CvOptions options;
  std::vector<std::uint64_t> seeds;             // one per repeat
  std::vector<std::vector<int>> fold_assignments;  // [repeat][row]
  std::vector<FoldResult> folds;                // ordered by (repeat, fold)
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
  double auc_roc = 0;
  std::vector<std::string> row_keys;            // "release/class" per dataset row
  std::vector<int> positive_votes;              // repeats in which the row was predicted positive
  std::vector<std::string> true_positives;      // label 1 and predicted positive in most repeats
  std::vector<std::string> notes;
};

EvaluationResult cross_validate(const Dataset& d, const CvOptions& options);
EvaluationResult cross_validate(const Dataset& d, const CvOptions& options, const Classifier& classifier);

}  // namespace smellscope
