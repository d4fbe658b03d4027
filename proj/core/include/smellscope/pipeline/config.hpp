#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smellscope/dataset/dataset.hpp"
#include "smellscope/history/history_features.hpp"
#include "smellscope/intensity/intensity.hpp"

namespace smellscope {

struct ReleaseConfig {
  std::string tag;
  std::string source;              // directory with the release sources
  std::optional<std::string> date;  // overrides the tag date from the history
};

struct ExperimentConfig {
  std::string project;
  std::vector<ReleaseConfig> releases;
  std::string history_log;   // log export, or
  std::string history_repo;  // git working directory
  std::optional<ReleaseConfig> horizon;  // closes the label window of the last release
  std::string thresholds;    // optional threshold JSON
  std::vector<ModelSpec> specs;
  int k = 10;
  int repeats = 100;
  std::uint64_t seed = 1;
  double lambda = 1.0;
  bool vif = true;
  double vif_threshold = 10.0;
  int rank_bins = 10;
  int rank_resamples = 20;
  IntensityOptions intensity;
  HistoryOptions history;
  std::string output = "out";
  int threads = 1;
};

// Paths are resolved against `base_dir`. Throws ValidationError listing every bad field.
ExperimentConfig parse_config(std::string_view json_text, const std::string& base_dir = {});
ExperimentConfig load_config(const std::string& path);
// Re-checks invariants after command line overrides.
void validate_config(const ExperimentConfig& config);

}  // namespace smellscope
