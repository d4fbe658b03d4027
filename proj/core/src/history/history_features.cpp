#include "smellscope/history/history_features.hpp"

#include <set>
#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"

namespace smellscope {

std::vector<ChangeHistory> build_windows(const ChangeLog& log, const std::vector<ReleaseTag>& releases,
                                         const std::optional<ReleaseTag>& horizon,
                                         const std::vector<ReleaseCatalog>& catalogs) {
  std::set<std::string> names;
  for (const auto& cat : catalogs) {
    for (const auto& c : cat.classes()) names.insert(c.qualified_name);
  }
  const ClassPathIndex index(std::vector<std::string>(names.begin(), names.end()));
  std::vector<ReleaseTag> bounds = releases;
  if (horizon) bounds.push_back(*horizon);
  std::vector<ChangeHistory> out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    ReleaseWindow w;
    w.to_tag = bounds[i].tag;
    w.to = bounds[i].timestamp;
    if (i > 0) {
      w.from_tag = bounds[i - 1].tag;
      w.from = bounds[i - 1].timestamp;
      if (*w.from >= w.to) throw InputError("release tag '" + w.to_tag + "' is not after '" + w.from_tag + "'");
    }
    out.push_back(ingest_history(log, w, index));
  }
  return out;
}

double HistoryFeatureRow::feature(const std::string& name) const {
  if (name == "str_scat_pred") return scattering.str_scat_pred;
  if (name == "sem_scat_pred") return scattering.sem_scat_pred;
  if (name == "ANA") return antipattern.ana;
  if (name == "ACM") return antipattern.acm;
  if (name == "ARL") return antipattern.arl;
  return evolution.get(name);
}

std::vector<std::string> history_feature_columns() {
  std::vector<std::string> cols(kEvolutionFeatureNames.begin(), kEvolutionFeatureNames.end());
  for (const char* c : {"str_scat_pred", "sem_scat_pred", "ANA", "ACM", "ARL"}) cols.emplace_back(c);
  return cols;
}

HistoryFeatureSet compute_history_features(const std::vector<ReleaseCatalog>& releases,
                                           const std::vector<std::map<std::string, int>>& smell_counts,
                                           const std::vector<ChangeHistory>& windows, const HistoryOptions& options,
                                           const ChangeCounter& counter) {
  if (releases.empty()) throw ContractViolation("no releases");
  if (smell_counts.size() != releases.size()) throw ConsistencyError("smell counts must cover every release");
  if (windows.size() != releases.size() && windows.size() != releases.size() + 1) {
    throw ConsistencyError("expected one window per release, plus an optional horizon window");
  }

  std::vector<std::set<std::string>> presence;
  for (const auto& cat : releases) {
    std::set<std::string> names;
    for (const auto& c : cat.classes()) names.insert(c.qualified_name);
    presence.push_back(std::move(names));
  }

  HistoryFeatureSet out;
  for (std::size_t r = 0; r < releases.size(); ++r) {
    const std::size_t label_idx = options.label_window == LabelWindow::Next ? r + 1 : r;
    if (label_idx >= windows.size()) {
      out.unlabeled_releases.push_back(releases[r].release());
      continue;
    }
    const auto& cat = releases[r];
    const std::vector<ChangeHistory> upto(windows.begin(), windows.begin() + static_cast<std::ptrdiff_t>(r + 1));
    const std::vector<std::set<std::string>> present(presence.begin(),
                                                     presence.begin() + static_cast<std::ptrdiff_t>(r + 1));
    const TextualIndex text(cat, options.use_idf);
    const auto scattering = all_scattering_predictors(windows[r], cat, text);

    std::map<std::string, std::int64_t> counts;
    for (const auto& c : cat.classes()) counts[c.qualified_name] = 0;
    for (const auto& [cls, n] : change_counts(windows[label_idx], counter)) {
      if (auto it = counts.find(cls); it != counts.end()) it->second = n;
    }
    std::map<std::string, bool> labels;
    for (const auto& l : label_change_proneness(counts)) labels[l.class_name] = l.label;

    for (const auto& c : cat.classes()) {
      std::vector<SmellTimelinePoint> timeline;
      for (std::size_t w = 0; w <= r; ++w) {
        const auto it = smell_counts[w].find(c.qualified_name);
        const int n = it == smell_counts[w].end() ? 0 : it->second;
        timeline.push_back({n > 0, n});
      }
      HistoryFeatureRow row;
      row.release = cat.release();
      row.class_name = c.qualified_name;
      row.evolution = compute_evolution_metrics(upto, present, c.qualified_name, c.loc);
      row.scattering = scattering.at(c.qualified_name);
      row.antipattern = antipattern_metrics(c.qualified_name, timeline, upto, options.run_length, counter);
      row.change_count = counts.at(c.qualified_name);
      row.label = labels.at(c.qualified_name);
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

std::string history_table_string(const std::vector<HistoryFeatureRow>& rows) {
  const auto cols = history_feature_columns();
  std::vector<std::string> header{"release", "class"};
  header.insert(header.end(), cols.begin(), cols.end());
  header.emplace_back("change_count");
  header.emplace_back("label");
  std::ostringstream out;
  csv::write_record(out, header);
  for (const auto& r : rows) {
    std::vector<std::string> cells{r.release, r.class_name};
    for (const auto& c : cols) cells.push_back(csv::format_number(r.feature(c)));
    cells.push_back(std::to_string(r.change_count));
    cells.emplace_back(r.label ? "1" : "0");
    csv::write_record(out, cells);
  }
  return out.str();
}

std::vector<HistoryFeatureRow> parse_history_table(const std::vector<std::string>& lines, const std::string& source) {
  const auto cols = history_feature_columns();
  std::vector<std::string> header{"release", "class"};
  header.insert(header.end(), cols.begin(), cols.end());
  header.emplace_back("change_count");
  header.emplace_back("label");
  if (lines.empty() || csv::split_record(lines[0]) != header) throw SchemaError(source + ": unexpected history header");
  std::vector<HistoryFeatureRow> out;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const auto cells = csv::split_record(lines[r]);
    if (cells.size() != header.size()) throw ParseError("wrong cell count", source, r + 1);
    HistoryFeatureRow row;
    row.release = cells[0];
    row.class_name = cells[1];
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto v = csv::parse_number(cells[i + 2]);
      if (!v) throw ParseError("non-numeric value '" + cells[i + 2] + "'", source, r + 1, cols[i]);
      if (cols[i] == "str_scat_pred") row.scattering.str_scat_pred = *v;
      else if (cols[i] == "sem_scat_pred") row.scattering.sem_scat_pred = *v;
      else if (cols[i] == "ANA") row.antipattern.ana = *v;
      else if (cols[i] == "ACM") row.antipattern.acm = *v;
      else if (cols[i] == "ARL") row.antipattern.arl = static_cast<int>(*v);
      else row.evolution.set(cols[i], *v);
    }
    const auto count = csv::parse_number(cells[cols.size() + 2]);
    if (!count) throw ParseError("non-numeric change count", source, r + 1, "change_count");
    row.change_count = static_cast<std::int64_t>(*count);
    const auto& label = cells.back();
    if (label != "0" && label != "1") throw ParseError("label must be 0 or 1", source, r + 1, "label");
    row.label = label == "1";
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<HistoryFeatureRow> load_history_table(const std::string& path) {
  return parse_history_table(csv::read_lines(path), path);
}

}  // namespace smellscope
