#include "smellscope/pipeline/experiment.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"
#include "smellscope/dataset/dataset.hpp"
#include "smellscope/history/catalog.hpp"
#include "smellscope/history/history_features.hpp"
#include "smellscope/intensity/intensity.hpp"
#include "smellscope/metrics/extractor.hpp"
#include "smellscope/metrics/metrics.hpp"
#include "smellscope/metrics/metrics_table.hpp"
#include "smellscope/ml/cross_validation.hpp"
#include "smellscope/ml/ranking.hpp"
#include "smellscope/ml/vif.hpp"
#include "smellscope/pipeline/artifacts.hpp"
#include "smellscope/pipeline/report.hpp"
#include "smellscope/smells/detector.hpp"
#include "smellscope/smells/smells_table.hpp"

namespace smellscope {

namespace fs = std::filesystem;

std::string_view stage_name(Stage s) noexcept {
  switch (s) {
    case Stage::Extract: return "extract";
    case Stage::Detect: return "detect";
    case Stage::Mine: return "mine";
    case Stage::Assemble: return "assemble";
    case Stage::Evaluate: return "evaluate";
    case Stage::Rank: return "rank";
    case Stage::Overlap: return "overlap";
    case Stage::Report: return "report";
  }
  return "";
}

namespace {

using Key = std::pair<std::string, std::string>;  // release, spec

class Runner {
 public:
  Runner(const ExperimentConfig& c, Stage target, const RunOptions& o, bool full)
      : c_(c), out_(c.output), target_(target), options_(o), full_(full) {
    for (const auto& r : c_.releases) releases_.push_back(r.tag);
  }

  RunOutcome run() {
    fs::create_directories(out_);
    guard(Stage::Extract, "", [&] { extract(); });
    if (target_ >= Stage::Detect) guard(Stage::Detect, "", [&] { detect(); });
    if (target_ >= Stage::Mine) guard(Stage::Mine, "", [&] { mine(); });
    if (target_ >= Stage::Assemble) assemble();
    if (target_ >= Stage::Evaluate) evaluate();
    if (target_ >= Stage::Rank) rank();
    if (target_ >= Stage::Overlap) guard(Stage::Overlap, "", [&] { overlap(); });
    write_skipped();
    if (target_ >= Stage::Report) {
      guard(Stage::Report, out_.string(), [&] {
        emit_report(out_.string());
        for (const char* f : {"report.md", "plot_fmeasure.csv", "plot_auc.csv"}) outcome_.written.emplace_back(f);
      });
    }
    return outcome_;
  }

 private:
  bool reuse(Stage s) const { return options_.resume || (!full_ && s < target_); }

  template <typename F>
  void guard(Stage s, const std::string& key, F&& body) {
    try {
      body();
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(std::string(stage_name(s)), key, e.what());
    }
  }

  void write(const fs::path& rel, const std::string& content) {
    const auto path = out_ / rel;
    fs::create_directories(path.parent_path());
    csv::write_file_atomic(path.string(), content);
    outcome_.written.push_back(rel.generic_string());
  }

  bool have(const fs::path& rel) const { return fs::exists(out_ / rel); }
  std::string at(const fs::path& rel) const { return (out_ / rel).string(); }

  void skip(const std::string& release, const std::string& spec, Stage s, const std::string& reason) {
    outcome_.skipped.push_back({release, spec, std::string(stage_name(s)), reason});
  }

  void extract() {
    if (reuse(Stage::Extract) && have("metrics.csv") && have("classes.csv")) {
      const auto table = load_metrics_table(at("metrics.csv"));
      const auto catalogs = load_catalog_table(at("classes.csv"));
      for (const auto& r : releases_) {
        const auto it = table.releases.find(r);
        if (it == table.releases.end()) throw InputError("metrics.csv lacks release '" + r + "'");
        metrics_.insert(metrics_.end(), it->second.begin(), it->second.end());
        bool found = false;
        for (const auto& cat : catalogs) {
          if (cat.release() == r) {
            catalogs_.push_back(cat);
            found = true;
          }
        }
        if (!found) throw InputError("classes.csv lacks release '" + r + "'");
      }
      return;
    }
    std::ostringstream diagnostics;
    csv::write_record(diagnostics, {"release", "file", "line", "message"});
    ExtractOptions eo;
    eo.threads = static_cast<unsigned>(c_.threads);
    for (const auto& r : c_.releases) {
      try {
        const auto model = parse_release(r.source, r.tag, eo);
        auto vectors = compute_release_metrics(model);
        catalogs_.push_back(build_catalog(model, vectors));
        metrics_.insert(metrics_.end(), vectors.begin(), vectors.end());
        for (const auto& d : model.diagnostics()) {
          csv::write_record(diagnostics, {r.tag, d.file, std::to_string(d.line), d.message});
        }
      } catch (const std::exception& e) {
        throw StageError("extract", r.tag, e.what());
      }
    }
    write("metrics.csv", metrics_table_string(metrics_));
    write("classes.csv", catalog_table_string(catalogs_));
    write("diagnostics.csv", diagnostics.str());
  }

  std::vector<EntityMetricVector> release_metrics(const std::string& r) const {
    std::vector<EntityMetricVector> out;
    for (const auto& v : metrics_) {
      if (v.release == r) out.push_back(v);
    }
    return out;
  }

  void detect() {
    if (reuse(Stage::Detect) && have("smells.csv") && have("intensity.csv")) {
      smells_ = load_smells_table(at("smells.csv"));
      intensities_ = load_intensity_table(at("intensity.csv"));
      return;
    }
    const auto thresholds = ThresholdConfig::load(c_.thresholds);
    for (const auto& r : releases_) {
      try {
        const auto vectors = release_metrics(r);
        auto found = detect_smells(vectors, thresholds);
        const auto ci = release_intensities(vectors, found, c_.intensity);
        smells_.insert(smells_.end(), found.begin(), found.end());
        intensities_.insert(intensities_.end(), ci.begin(), ci.end());
      } catch (const std::exception& e) {
        throw StageError("detect", r, e.what());
      }
    }
    write("smells.csv", smells_table_string(smells_));
    write("intensity.csv", intensity_table_string(intensities_));
  }

  void mine() {
    if (reuse(Stage::Mine) && have("history_features.csv")) {
      history_ = load_history_table(at("history_features.csv"));
    } else {
      const ChangeLog log = c_.history_log.empty() ? read_git_history(c_.history_repo) : load_change_log(c_.history_log);
      auto tag_of = [&](const ReleaseConfig& r) {
        std::map<std::string, Timestamp> overrides;
        if (r.date) overrides[r.tag] = *parse_iso8601(*r.date);
        return ReleaseTag{r.tag, resolve_tag(log, r.tag, overrides)};
      };
      std::vector<ReleaseTag> tags;
      for (const auto& r : c_.releases) tags.push_back(tag_of(r));
      std::optional<ReleaseTag> horizon;
      if (c_.horizon) horizon = tag_of(*c_.horizon);
      const auto windows = build_windows(log, tags, horizon, catalogs_);

      std::vector<std::map<std::string, int>> counts(releases_.size());
      for (const auto& s : smells_) {
        for (std::size_t i = 0; i < releases_.size(); ++i) {
          if (releases_[i] == s.release) ++counts[i][s.owner_class];
        }
      }
      history_ = compute_history_features(catalogs_, counts, windows, c_.history).rows;
      write("history_features.csv", history_table_string(history_));
    }
    for (const auto& r : releases_) {
      const bool labeled = std::any_of(history_.begin(), history_.end(), [&](const auto& h) { return h.release == r; });
      if (labeled) labeled_.push_back(r);
      else skip(r, "", Stage::Mine, "no label window after this release");
    }
  }

  template <typename T>
  static std::vector<T> of_release(const std::vector<T>& all, const std::string& r) {
    std::vector<T> out;
    for (const auto& x : all) {
      if (x.release == r) out.push_back(x);
    }
    return out;
  }

  static fs::path dataset_path(const std::string& r, const ModelSpec& s) {
    return fs::path("datasets") / r / (s.name() + ".csv");
  }
  static fs::path evaluation_path(const std::string& r, const ModelSpec& s) {
    return fs::path("evaluation") / (artifact_stem(r, s.name()) + ".json");
  }

  void assemble() {
    for (const auto& r : labeled_) {
      AssemblyInputs in{release_metrics(r), of_release(intensities_, r), of_release(history_, r)};
      for (const auto& spec : c_.specs) {
        const auto key = r + "/" + spec.name();
        guard(Stage::Assemble, key, [&] {
          const auto rel = dataset_path(r, spec);
          if (reuse(Stage::Assemble) && have(rel)) {
            datasets_[{r, spec.name()}] = read_dataset(at(rel));
            return;
          }
          try {
            auto d = clean_dataset(assemble_dataset(spec, in));
            write(rel, dataset_string(d));
            datasets_[{r, spec.name()}] = std::move(d);
          } catch (const EmptyDatasetError& e) {
            skip(r, spec.name(), Stage::Assemble, e.what());
          }
        });
      }
    }
  }

  void evaluate() {
    for (const auto& [key, d] : datasets_) {
      const auto spec = ModelSpec::parse(key.second);
      guard(Stage::Evaluate, key.first + "/" + key.second, [&] {
        const auto rel = evaluation_path(key.first, spec);
        if (reuse(Stage::Evaluate) && have(rel)) {
          evaluations_[key] = load_evaluation(at(rel));
          return;
        }
        Dataset model_data = d;
        std::vector<std::string> removed, notes;
        if (c_.vif) {
          if (d.features.size() < 2) {
            notes.emplace_back("VIF filter skipped: fewer than two features");
          } else if (d.rows.size() < d.features.size() + 1) {
            notes.emplace_back("VIF filter skipped: fewer rows than features + 1");
          } else {
            auto v = vif_filter(d, c_.vif_threshold);
            model_data = std::move(v.dataset);
            removed = std::move(v.removed);
          }
        }
        CvOptions cv;
        cv.k = c_.k;
        cv.repeats = c_.repeats;
        cv.lambda = c_.lambda;
        cv.base_seed = c_.seed;
        cv.threads = c_.threads;
        try {
          auto result = cross_validate(model_data, cv);
          result.vif_removed = removed;
          result.notes = notes;
          write(rel, evaluation_json_string(result));
          evaluations_[key] = std::move(result);
        } catch (const StratificationError& e) {
          skip(key.first, key.second, Stage::Evaluate, e.what());
        } catch (const DegenerateTrainingError& e) {
          skip(key.first, key.second, Stage::Evaluate, e.what());
        }
      });
    }
  }

  Dataset model_view(const Key& key) const {
    const auto& d = datasets_.at(key);
    const auto& e = evaluations_.at(key);
    Dataset out;
    out.spec = d.spec;
    out.features = e.features;
    std::vector<std::size_t> idx;
    for (const auto& f : e.features) idx.push_back(d.feature_index(f));
    for (const auto& r : d.rows) {
      FeatureRow row{r.release, r.class_name, {}, r.is_smelly, r.label};
      for (auto j : idx) row.values.push_back(r.values[j]);
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  void rank() {
    RankOptions ro;
    ro.bins = c_.rank_bins;
    ro.resamples = c_.rank_resamples;
    ro.seed = c_.seed;
    std::map<std::string, std::vector<Dataset>> by_spec;
    for (const auto& [key, e] : evaluations_) {
      guard(Stage::Rank, key.first + "/" + key.second, [&] {
        const auto view = model_view(key);
        by_spec[key.second].push_back(view);
        const fs::path rel = fs::path("ranks") / (artifact_stem(key.first, key.second) + ".csv");
        if (reuse(Stage::Rank) && have(rel)) return;
        write(rel, ranks_table_string(rank_features({view}, ro)));
      });
    }
    for (const auto& [spec, list] : by_spec) {
      guard(Stage::Rank, spec, [&] {
        const fs::path rel = fs::path("ranks") / (spec + ".csv");
        if (reuse(Stage::Rank) && have(rel)) return;
        write(rel, ranks_table_string(rank_features(list, ro)));
      });
    }
  }

  void overlap() {
    for (const auto& r : labeled_) {
      std::set<std::string> universe;
      std::set<std::string> smelly;
      for (const auto& i : intensities_) {
        if (i.release == r && !i.kinds.empty()) smelly.insert(i.class_name);
      }
      for (const auto& h : history_) {
        if (h.release == r && h.label && smelly.count(h.class_name)) universe.insert(r + "/" + h.class_name);
      }
      std::vector<OverlapRow> rows;
      for (std::size_t a = 0; a < c_.specs.size(); ++a) {
        for (std::size_t b = a + 1; b < c_.specs.size(); ++b) {
          const Key ka{r, c_.specs[a].name()}, kb{r, c_.specs[b].name()};
          if (!evaluations_.count(ka) || !evaluations_.count(kb)) continue;
          auto restrict_to = [&](const EvaluationResult& e) {
            std::set<std::string> out;
            for (const auto& t : e.true_positives) {
              if (universe.count(t)) out.insert(t);
            }
            return out;
          };
          const auto o = overlap_analysis(restrict_to(evaluations_.at(ka)), restrict_to(evaluations_.at(kb)), universe);
          rows.push_back({ka.second, kb.second, o.both, o.only_a, o.only_b});
        }
      }
      if (rows.empty()) continue;
      const fs::path rel = fs::path("overlap") / (r + ".csv");
      if (reuse(Stage::Overlap) && have(rel)) continue;
      write(rel, overlap_table_string(rows));
    }
  }

  void write_skipped() {
    std::ostringstream out;
    csv::write_record(out, {"release", "spec", "stage", "reason"});
    for (const auto& s : outcome_.skipped) csv::write_record(out, {s.release, s.spec, s.stage, s.reason});
    write("skipped.csv", out.str());
  }

  const ExperimentConfig& c_;
  fs::path out_;
  Stage target_;
  RunOptions options_;
  bool full_;
  RunOutcome outcome_;

  std::vector<std::string> releases_;
  std::vector<std::string> labeled_;
  std::vector<EntityMetricVector> metrics_;
  std::vector<ReleaseCatalog> catalogs_;
  std::vector<SmellInstance> smells_;
  std::vector<ClassIntensity> intensities_;
  std::vector<HistoryFeatureRow> history_;
  std::map<Key, Dataset> datasets_;
  std::map<Key, EvaluationResult> evaluations_;
};

}  // namespace

RunOutcome run_stages(const ExperimentConfig& config, Stage target, const RunOptions& options) {
  validate_config(config);
  return Runner(config, target, options, false).run();
}

RunOutcome run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  validate_config(config);
  return Runner(config, Stage::Report, options, true).run();
}

}  // namespace smellscope
