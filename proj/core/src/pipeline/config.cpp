#include "smellscope/pipeline/config.hpp"

#include <filesystem>
#include <nlohmann/json.hpp>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"
#include "smellscope/history/change_log.hpp"

namespace smellscope {

namespace {

using nlohmann::json;

class Reader {
 public:
  Reader(std::string base, std::vector<std::string>& errors) : base_(std::move(base)), errors_(errors) {}

  std::string path(const std::string& p) const {
    if (p.empty() || base_.empty() || std::filesystem::path(p).is_absolute()) return p;
    return (std::filesystem::path(base_) / p).lexically_normal().string();
  }

  template <typename T>
  std::optional<T> get(const json& obj, const char* key, const std::string& field) {
    if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
    try {
      return obj.at(key).get<T>();
    } catch (const json::exception&) {
      errors_.push_back(field + ": wrong type");
      return std::nullopt;
    }
  }

  void error(const std::string& e) { errors_.push_back(e); }

 private:
  std::string base_;
  std::vector<std::string>& errors_;
};

std::optional<ReleaseConfig> read_release(const json& j, const std::string& field, Reader& in, bool need_source) {
  if (!j.is_object()) {
    in.error(field + ": must be an object");
    return std::nullopt;
  }
  ReleaseConfig r;
  r.tag = in.get<std::string>(j, "tag", field + ".tag").value_or("");
  if (r.tag.empty()) in.error(field + ".tag: required");
  r.source = in.path(in.get<std::string>(j, "source", field + ".source").value_or(""));
  if (need_source && r.source.empty()) in.error(field + ".source: required");
  r.date = in.get<std::string>(j, "date", field + ".date");
  if (r.date && !parse_iso8601(*r.date)) in.error(field + ".date: not an ISO 8601 timestamp");
  return r;
}

std::vector<std::string> check(const ExperimentConfig& c) {
  std::vector<std::string> errors;
  if (c.releases.empty()) errors.emplace_back("releases: at least one release is required");
  if (c.specs.empty()) errors.emplace_back("specs: at least one model spec is required");
  if (c.history_log.empty() == c.history_repo.empty()) {
    errors.emplace_back("history: exactly one of history.log or history.repo is required");
  }
  if (c.k < 2) errors.emplace_back("cv.k: must be at least 2");
  if (c.repeats < 1) errors.emplace_back("cv.repeats: must be at least 1");
  if (!(c.lambda >= 0)) errors.emplace_back("cv.lambda: must be non-negative");
  if (c.rank_bins < 2) errors.emplace_back("rank.bins: must be at least 2");
  if (c.rank_resamples < 2) errors.emplace_back("rank.resamples: must be at least 2");
  if (!(c.vif_threshold > 1)) errors.emplace_back("vif.threshold: must exceed 1");
  if (c.threads < 1) errors.emplace_back("threads: must be at least 1");
  if (c.output.empty()) errors.emplace_back("output: required");
  return errors;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("config: ") + e.what()});
  }
  if (!doc.is_object()) throw ValidationError({"config: must be a JSON object"});

  std::vector<std::string> errors;
  Reader in(base_dir, errors);
  ExperimentConfig c;
  c.project = in.get<std::string>(doc, "project", "project").value_or("project");

  if (doc.contains("releases") && doc["releases"].is_array()) {
    for (std::size_t i = 0; i < doc["releases"].size(); ++i) {
      if (auto r = read_release(doc["releases"][i], "releases[" + std::to_string(i) + "]", in, true)) {
        c.releases.push_back(*r);
      }
    }
  } else if (doc.contains("releases")) {
    errors.emplace_back("releases: must be an array");
  }

  const json history = doc.value("history", json::object());
  c.history_log = in.path(in.get<std::string>(history, "log", "history.log").value_or(""));
  c.history_repo = in.path(in.get<std::string>(history, "repo", "history.repo").value_or(""));
  if (history.contains("horizon")) c.horizon = read_release(history["horizon"], "history.horizon", in, false);
  if (auto lw = in.get<std::string>(history, "label_window", "history.label_window")) {
    if (*lw == "next") c.history.label_window = LabelWindow::Next;
    else if (*lw == "current") c.history.label_window = LabelWindow::Current;
    else errors.emplace_back("history.label_window: expected 'next' or 'current'");
  }
  if (auto rl = in.get<std::string>(history, "run_length", "history.run_length")) {
    if (*rl == "longest") c.history.run_length = RunLengthMode::Longest;
    else if (*rl == "most_recent") c.history.run_length = RunLengthMode::MostRecent;
    else errors.emplace_back("history.run_length: expected 'longest' or 'most_recent'");
  }
  c.history.use_idf = in.get<bool>(history, "idf", "history.idf").value_or(true);

  c.thresholds = in.path(in.get<std::string>(doc, "thresholds", "thresholds").value_or(""));

  if (doc.contains("specs") && doc["specs"].is_array()) {
    for (std::size_t i = 0; i < doc["specs"].size(); ++i) {
      const std::string field = "specs[" + std::to_string(i) + "]";
      if (!doc["specs"][i].is_string()) {
        errors.push_back(field + ": must be a string");
        continue;
      }
      try {
        const auto spec = ModelSpec::parse(doc["specs"][i].get<std::string>());
        bool dup = false;
        for (const auto& s : c.specs) dup = dup || s == spec;
        if (dup) errors.push_back(field + ": duplicate spec " + spec.name());
        else c.specs.push_back(spec);
      } catch (const SchemaError& e) {
        errors.push_back(field + ": " + e.what());
      }
    }
  } else if (doc.contains("specs")) {
    errors.emplace_back("specs: must be an array");
  }

  const json cv = doc.value("cv", json::object());
  c.k = in.get<int>(cv, "k", "cv.k").value_or(c.k);
  c.repeats = in.get<int>(cv, "repeats", "cv.repeats").value_or(c.repeats);
  c.seed = in.get<std::uint64_t>(cv, "seed", "cv.seed").value_or(c.seed);
  c.lambda = in.get<double>(cv, "lambda", "cv.lambda").value_or(c.lambda);

  const json vif = doc.value("vif", json::object());
  c.vif = in.get<bool>(vif, "enabled", "vif.enabled").value_or(true);
  c.vif_threshold = in.get<double>(vif, "threshold", "vif.threshold").value_or(c.vif_threshold);

  const json rank = doc.value("rank", json::object());
  c.rank_bins = in.get<int>(rank, "bins", "rank.bins").value_or(c.rank_bins);
  c.rank_resamples = in.get<int>(rank, "resamples", "rank.resamples").value_or(c.rank_resamples);

  const json intensity = doc.value("intensity", json::object());
  if (auto p = in.get<std::string>(intensity, "placement", "intensity.placement")) {
    if (*p == "linear") c.intensity.placement = PlacementMode::Linear;
    else if (*p == "rank") c.intensity.placement = PlacementMode::RankPercentile;
    else errors.emplace_back("intensity.placement: expected 'linear' or 'rank'");
  }
  if (auto s = in.get<std::string>(intensity, "scale", "intensity.scale")) {
    if (*s == "1-10") c.intensity.scale = IntensityScale::OneToTen;
    else if (*s == "0-10") c.intensity.scale = IntensityScale::ZeroToTen;
    else errors.emplace_back("intensity.scale: expected '1-10' or '0-10'");
  }

  c.output = in.path(in.get<std::string>(doc, "output", "output").value_or(c.output));
  c.threads = in.get<int>(doc, "threads", "threads").value_or(c.threads);

  for (auto& e : check(c)) errors.push_back(std::move(e));
  if (!errors.empty()) throw ValidationError(errors);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::vector<std::string> lines;
  try {
    lines = csv::read_lines(path);
  } catch (const InputError& e) {
    throw ValidationError({std::string("config: ") + e.what()});
  }
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  return parse_config(text, std::filesystem::path(path).parent_path().string());
}

void validate_config(const ExperimentConfig& config) {
  auto errors = check(config);
  if (!errors.empty()) throw ValidationError(errors);
}

}  // namespace smellscope
