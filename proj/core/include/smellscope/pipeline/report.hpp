#pragma once

#include <string>
#include <vector>

#include "smellscope/ml/cross_validation.hpp"

namespace smellscope {

struct ModelSummary {
  std::string spec;
  std::size_t releases = 0;
  double f_q1 = 0, f_median = 0, f_q3 = 0;
  double auc_q1 = 0, auc_median = 0, auc_q3 = 0;
};

// One row per spec over the release-level aggregates; sorted by median F descending,
// then by spec name.
std::vector<ModelSummary> summarize_evaluations(const std::vector<EvaluationResult>& evaluations);

struct ReportFiles {
  std::string markdown;
  std::string plot_fmeasure;
  std::string plot_auc;
};

// Renders the report from artifacts under `dir` (evaluation/, ranks/, overlap/, skipped.csv).
ReportFiles render_report(const std::string& dir);

// Writes report.md, plot_fmeasure.csv and plot_auc.csv into `dir`. Throws InputError when
// there is no evaluation to report.
ReportFiles emit_report(const std::string& dir);

}  // namespace smellscope
