#include "smellscope/pipeline/report.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"
#include "smellscope/ml/scott_knott.hpp"
#include "smellscope/ml/stats.hpp"
#include "smellscope/pipeline/artifacts.hpp"

namespace smellscope {

namespace fs = std::filesystem;

namespace {

std::string fixed(double v, int digits = 3) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* const kNotes[] = {
    "Classifier: L2-regularized logistic regression on standardized features, fitted by Newton iterations; "
    "the intercept is not penalized.",
    "Change counts: lines added plus lines deleted per touched file. Statement-level change types are not "
    "distinguished.",
    "Labels: a class is change-prone when its change count exceeds the median of its release.",
    "Intensity: each satisfied predicate is placed between its threshold and the most extreme observed value, "
    "mapped to [1,10] unless the 0-10 scale is configured; a class takes the maximum over its smells and "
    "non-smelly classes get 0.",
    "Recall is TP / (TP + FN).",
    "Dataset cleaning drops rows with missing values, constant features, duplicate features, rows with "
    "conflicting labels and duplicate rows.",
    "Semantic scattering divides by the mean pairwise similarity floored at 0.01; both scattering measures are 0 "
    "for developers who changed fewer than two classes.",
    "ACM weights the change entropy of each window in which the class was smelly by the class's share of the "
    "window's changes.",
    "Scott-Knott ESD log-transforms all samples when any group has skewness above 1, and merges adjacent "
    "clusters whose Cliff's delta is below 0.147.",
};

}  // namespace

std::vector<ModelSummary> summarize_evaluations(const std::vector<EvaluationResult>& evaluations) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> by_spec;
  for (const auto& e : evaluations) {
    by_spec[e.spec].first.push_back(e.f_measure);
    by_spec[e.spec].second.push_back(e.auc_roc);
  }
  std::vector<ModelSummary> out;
  for (const auto& [spec, values] : by_spec) {
    const auto& [f, auc] = values;
    out.push_back({spec, f.size(), quantile(f, 0.25), quantile(f, 0.5), quantile(f, 0.75), quantile(auc, 0.25),
                   quantile(auc, 0.5), quantile(auc, 0.75)});
  }
  std::sort(out.begin(), out.end(), [](const ModelSummary& a, const ModelSummary& b) {
    return a.f_median != b.f_median ? a.f_median > b.f_median : a.spec < b.spec;
  });
  return out;
}

ReportFiles render_report(const std::string& dir) {
  const fs::path root(dir);
  std::vector<EvaluationResult> evaluations;
  for (const auto& p : sorted_files(root / "evaluation", ".json")) evaluations.push_back(load_evaluation(p.string()));
  if (evaluations.empty()) throw InputError("nothing to report: no evaluation documents under " + dir);

  ReportFiles files;
  std::ostringstream md;
  md << "# Change-proneness evaluation\n\n";
  const auto& o = evaluations.front().options;
  md << "Cross-validation: " << o.k << "-fold, " << o.repeats << " repeats, base seed " << o.base_seed
     << ", lambda " << csv::format_number(o.lambda) << ".\n\n";

  md << "## Models\n\n";
  md << "| Model | Releases | F Q1 | F median | F Q3 | AUC Q1 | AUC median | AUC Q3 |\n";
  md << "|---|---|---|---|---|---|---|---|\n";
  const auto summary = summarize_evaluations(evaluations);
  for (const auto& s : summary) {
    md << "| " << s.spec << " | " << s.releases << " | " << fixed(s.f_q1) << " | " << fixed(s.f_median) << " | "
       << fixed(s.f_q3) << " | " << fixed(s.auc_q1) << " | " << fixed(s.auc_median) << " | " << fixed(s.auc_q3)
       << " |\n";
  }

  std::map<std::string, std::vector<double>> release_auc, fold_auc;
  for (const auto& e : evaluations) {
    release_auc[e.spec].push_back(e.auc_roc);
    for (const auto& f : e.folds) fold_auc[e.spec].push_back(f.auc);
  }
  const bool per_release =
      std::all_of(release_auc.begin(), release_auc.end(), [](const auto& kv) { return kv.second.size() >= 2; });
  md << "\n## Scott-Knott ESD clusters (AUC)\n\n";
  md << (per_release ? "Samples: release-level AUC values.\n\n" : "Samples: per-fold AUC values.\n\n");
  const auto clusters = scott_knott_esd(per_release ? release_auc : fold_auc);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    md << i + 1 << ". ";
    for (std::size_t j = 0; j < clusters[i].size(); ++j) md << (j ? ", " : "") << clusters[i][j];
    md << "\n";
  }

  md << "\n## Releases\n\n| Release | Model | Precision | Recall | F | AUC | Features |\n|---|---|---|---|---|---|---|\n";
  for (const auto& e : evaluations) {
    md << "| " << e.release << " | " << e.spec << " | " << fixed(e.precision) << " | " << fixed(e.recall) << " | "
       << fixed(e.f_measure) << " | " << fixed(e.auc_roc) << " | " << e.features.size() << " |\n";
  }

  const auto rank_files = sorted_files(root / "ranks", ".csv");
  bool rank_header = false;
  for (const auto& p : rank_files) {
    const auto stem = p.stem().string();
    if (stem.find("__") != std::string::npos) continue;
    if (!rank_header) {
      md << "\n## Feature ranking across releases\n";
      rank_header = true;
    }
    md << "\n### " << stem << "\n\n| Feature | Mean gain ratio | Std. dev. | Top-cluster % |\n|---|---|---|---|\n";
    const auto lines = csv::read_lines(p.string());
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto c = csv::split_record(lines[i]);
      if (c.size() != 4) continue;
      md << "| " << c[0] << " | " << fixed(csv::parse_number(c[1]).value_or(0)) << " | "
         << fixed(csv::parse_number(c[2]).value_or(0)) << " | " << fixed(csv::parse_number(c[3]).value_or(0), 1)
         << " |\n";
    }
  }

  const auto overlap_files = sorted_files(root / "overlap", ".csv");
  if (!overlap_files.empty()) {
    md << "\n## Overlap of true positives (smelly, change-prone classes)\n\n";
    md << "| Release | Models | Both % | Only first % | Only second % |\n|---|---|---|---|---|\n";
    for (const auto& p : overlap_files) {
      for (const auto& r : parse_overlap_table(csv::read_lines(p.string()), p.string())) {
        md << "| " << p.stem().string() << " | " << r.model_a << " vs " << r.model_b << " | " << fixed(r.both, 1)
           << " | " << fixed(r.only_a, 1) << " | " << fixed(r.only_b, 1) << " |\n";
      }
    }
  }

  if (fs::exists(root / "skipped.csv")) {
    const auto lines = csv::read_lines((root / "skipped.csv").string());
    if (lines.size() > 1) {
      md << "\n## Skipped\n\n| Release | Model | Stage | Reason |\n|---|---|---|---|\n";
      for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto c = csv::split_record(lines[i]);
        if (c.size() == 4) md << "| " << c[0] << " | " << c[1] << " | " << c[2] << " | " << c[3] << " |\n";
      }
    }
  }

  md << "\n## Methodological notes\n\n";
  for (const char* note : kNotes) md << "- " << note << "\n";
  files.markdown = md.str();

  std::ostringstream pf, pa;
  csv::write_record(pf, {"spec", "release", "f_measure"});
  csv::write_record(pa, {"spec", "release", "auc_roc"});
  for (const auto& e : evaluations) {
    csv::write_record(pf, {e.spec, e.release, csv::format_number(e.f_measure)});
    csv::write_record(pa, {e.spec, e.release, csv::format_number(e.auc_roc)});
  }
  files.plot_fmeasure = pf.str();
  files.plot_auc = pa.str();
  return files;
}

ReportFiles emit_report(const std::string& dir) {
  auto files = render_report(dir);
  const fs::path root(dir);
  csv::write_file_atomic((root / "report.md").string(), files.markdown);
  csv::write_file_atomic((root / "plot_fmeasure.csv").string(), files.plot_fmeasure);
  csv::write_file_atomic((root / "plot_auc.csv").string(), files.plot_auc);
  return files;
}

}  // namespace smellscope
