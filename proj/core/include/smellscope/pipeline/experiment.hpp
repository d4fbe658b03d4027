#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smellscope/pipeline/config.hpp"

namespace smellscope {

enum class Stage { Extract, Detect, Mine, Assemble, Evaluate, Rank, Overlap, Report };

std::string_view stage_name(Stage s) noexcept;

struct RunOptions {
  // Reuse artifacts of every stage found on disk instead of recomputing them.
  bool resume = false;
};

struct SkippedItem {
  std::string release;
  std::string spec;
  std::string stage;
  std::string reason;
};

struct RunOutcome {
  std::vector<std::string> written;    // artifact paths relative to the output directory
  std::vector<SkippedItem> skipped;    // non-fatal per-dataset failures
};

// Runs every stage up to and including `target`. Stages before the target reuse their
// artifacts when present; the target itself is recomputed unless options.resume is set
// and it is the full run. Fatal failures raise StageError naming the stage and input key.
RunOutcome run_stages(const ExperimentConfig& config, Stage target, const RunOptions& options = {});

// The full pipeline, ending with the report.
RunOutcome run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace smellscope
