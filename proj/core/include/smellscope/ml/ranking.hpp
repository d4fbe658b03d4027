#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smellscope/dataset/dataset.hpp"
#include "smellscope/ml/scott_knott.hpp"

namespace smellscope {

// Equal-frequency bin per value, assigned by rank so ties share a bin:
// bin = min(bins - 1, floor(#{smaller values} * bins / n)).
std::vector<int> equal_frequency_bins(const std::vector<double>& values, int bins);

// Shannon entropy (bits) of a discrete sample.
double entropy(const std::vector<int>& symbols);
double entropy(const std::vector<bool>& labels);

// H(labels) - H(labels | bins).
double information_gain(const std::vector<int>& bins, const std::vector<bool>& labels);
// Information gain over split entropy; 0 when the split entropy is 0.
double gain_ratio(const std::vector<int>& bins, const std::vector<bool>& labels);

struct FeatureGain {
  std::string feature;
  double gain_ratio = 0;
  double info_gain = 0;
};

// Sorted by gain ratio descending, then by name.
std::vector<FeatureGain> gain_ratio_rank(const Dataset& d, int bins = 10);

struct FeatureRankEntry {
  std::string feature;
  double mean_gain = 0;
  double stddev = 0;
  double top_likelihood = 0;  // percent of datasets where the feature is in the top SK-ESD cluster
};

struct RankOptions {
  int bins = 10;
  int resamples = 20;
  std::uint64_t seed = 0;
  ScottKnottOptions scott_knott;
};

// Per dataset: full-data gain ratios, plus bootstrap resamples clustered with SK-ESD to find
// the top group. Across datasets: mean and standard deviation of the gains. Features missing
// from a dataset do not contribute to its statistics.
std::vector<FeatureRankEntry> rank_features(const std::vector<Dataset>& datasets, const RankOptions& options = {});

std::string ranks_table_string(const std::vector<FeatureRankEntry>& ranks);

}  // namespace smellscope
