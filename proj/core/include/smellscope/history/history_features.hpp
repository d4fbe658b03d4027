#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smellscope/history/catalog.hpp"
#include "smellscope/history/change_log.hpp"
#include "smellscope/history/change_metrics.hpp"
#include "smellscope/history/scattering.hpp"

namespace smellscope {

// Which window supplies the change-proneness label of release R: the one after R
// (default, no overlap with the features) or the one ending at R.
enum class LabelWindow { Next, Current };

struct HistoryOptions {
  LabelWindow label_window = LabelWindow::Next;
  RunLengthMode run_length = RunLengthMode::Longest;
  bool use_idf = true;
};

struct ReleaseTag {
  std::string tag;
  Timestamp timestamp = 0;
};

// One window per release tag plus, when `horizon` is set, a final window after the last release.
// Paths are mapped against the classes of every catalog.
std::vector<ChangeHistory> build_windows(const ChangeLog& log, const std::vector<ReleaseTag>& releases,
                                         const std::optional<ReleaseTag>& horizon,
                                         const std::vector<ReleaseCatalog>& catalogs);

struct HistoryFeatureRow {
  std::string release;
  std::string class_name;
  EvolutionFeatures evolution;
  ScatteringFeatures scattering;
  AntipatternFeatures antipattern;
  std::int64_t change_count = 0;
  bool label = false;

  // Value by column name (evolution names, str_scat_pred, sem_scat_pred, ANA, ACM, ARL).
  double feature(const std::string& name) const;

  friend bool operator==(const HistoryFeatureRow&, const HistoryFeatureRow&) = default;
};

struct HistoryFeatureSet {
  std::vector<HistoryFeatureRow> rows;
  std::vector<std::string> unlabeled_releases;  // releases without a label window
};

// Feature columns, in CSV order.
std::vector<std::string> history_feature_columns();

// `smell_counts[i]` maps classes of release i to their number of smell instances.
HistoryFeatureSet compute_history_features(const std::vector<ReleaseCatalog>& releases,
                                           const std::vector<std::map<std::string, int>>& smell_counts,
                                           const std::vector<ChangeHistory>& windows,
                                           const HistoryOptions& options = {},
                                           const ChangeCounter& counter = default_counter());

// history_features.csv: release,class,<feature columns>,change_count,label
std::string history_table_string(const std::vector<HistoryFeatureRow>& rows);
std::vector<HistoryFeatureRow> parse_history_table(const std::vector<std::string>& lines,
                                                   const std::string& source = {});
std::vector<HistoryFeatureRow> load_history_table(const std::string& path);

}  // namespace smellscope
