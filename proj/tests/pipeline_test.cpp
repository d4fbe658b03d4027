#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"
#include "smellscope/pipeline/artifacts.hpp"
#include "smellscope/pipeline/config.hpp"
#include "smellscope/pipeline/experiment.hpp"
#include "smellscope/pipeline/report.hpp"
#include "test_support.hpp"

using namespace smellscope;
namespace fs = std::filesystem;

namespace {

std::string fixture_config() { return (test::fixture_dir() / "project" / "config.json").string(); }

ExperimentConfig small_config(const fs::path& out, std::vector<std::string> specs = {"SM+none", "SM+intensity"}) {
  auto c = load_config(fixture_config());
  c.output = out.string();
  c.specs.clear();
  for (const auto& s : specs) c.specs.push_back(ModelSpec::parse(s));
  c.repeats = 3;
  return c;
}

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) files[fs::relative(e.path(), root).string()] = test::slurp(e.path());
  return files;
}

EvaluationResult eval(const std::string& spec, const std::string& release, std::vector<double> fold_f) {
  EvaluationResult r;
  r.spec = spec;
  r.release = release;
  for (std::size_t i = 0; i < fold_f.size(); ++i) {
    FoldResult f;
    f.fold = static_cast<int>(i);
    f.scores.f_measure = fold_f[i];
    f.auc = 0.5 + fold_f[i] / 4;
    r.folds.push_back(f);
    r.f_measure += fold_f[i] / static_cast<double>(fold_f.size());
    r.auc_roc += f.auc / static_cast<double>(fold_f.size());
  }
  return r;
}

}  // namespace

TEST(Config, FixtureLoadsWithResolvedPaths) {
  const auto c = load_config(fixture_config());
  EXPECT_EQ(c.project, "shop");
  ASSERT_EQ(c.releases.size(), 3u);
  EXPECT_TRUE(fs::is_directory(c.releases[0].source));
  EXPECT_TRUE(fs::exists(c.history_log));
  ASSERT_TRUE(c.horizon.has_value());
  EXPECT_EQ(c.horizon->tag, "r4");
  EXPECT_EQ(c.k, 3);
}

TEST(Config, KOfOneNamesField) {
  try {
    parse_config(R"({"project": "x", "releases": [{"tag": "a", "source": "."}], "history": {"log": "h"},
                     "specs": ["SM"], "cv": {"k": 1}})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    bool named = false;
    for (const auto& f : e.fields()) named |= f.rfind("cv.k", 0) == 0;
    EXPECT_TRUE(named) << e.what();
  }
}

TEST(Config, ListsEveryViolation) {
  try {
    parse_config(R"({"releases": [], "specs": ["NOPE"], "cv": {"k": 1, "repeats": 0}})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_GE(e.fields().size(), 4u) << e.what();
  }
}

TEST(Artifacts, EvaluationJsonRoundTrip) {
  auto r = eval("SM+none", "r1", {0.25, 1.0 / 3.0});
  r.features = {"CBO", "LOC"};
  r.seeds = {7};
  r.fold_assignments = {{0, 1, 0}};
  r.row_keys = {"r1/A", "r1/B", "r1/C"};
  r.positive_votes = {1, 0, 1};
  r.true_positives = {"r1/A"};
  r.notes = {"n"};
  const auto back = parse_evaluation_json(evaluation_json_string(r));
  EXPECT_EQ(evaluation_json_string(back), evaluation_json_string(r));
  EXPECT_EQ(back.f_measure, r.f_measure);
}

TEST(Report, SortedByMedianFThenName) {
  const auto s = summarize_evaluations({eval("B", "r1", {0.4}), eval("A", "r1", {0.4}), eval("C", "r1", {0.9}),
                                        eval("B", "r2", {0.6}), eval("A", "r2", {0.6})});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].spec, "C");
  EXPECT_EQ(s[1].spec, "A");
  EXPECT_EQ(s[2].spec, "B");
  EXPECT_DOUBLE_EQ(s[1].f_median, 0.5);
  EXPECT_EQ(s[1].releases, 2u);
}

TEST(Report, EmptyDirectoryIsInputError) {
  test::TempDir dir("report");
  EXPECT_THROW(emit_report(dir.str()), InputError);
}

TEST(Experiment, TwoSpecsProduceEvaluationsAndSummary) {
  test::TempDir out("run");
  const auto outcome = run_experiment(small_config(out.path()));
  for (const char* rel : {"r1", "r2", "r3"})
    for (const char* spec : {"SM+none", "SM+intensity"})
      EXPECT_TRUE(fs::exists(out.path() / "evaluation" / (artifact_stem(rel, spec) + ".json"))) << rel << spec;
  const auto report = test::slurp(out.path() / "report.md");
  EXPECT_NE(report.find("| SM+none |"), std::string::npos);
  EXPECT_NE(report.find("| SM+intensity |"), std::string::npos);
  for (const char* f : {"metrics.csv", "smells.csv", "intensity.csv", "history_features.csv", "classes.csv",
                        "plot_fmeasure.csv", "plot_auc.csv", "skipped.csv", "ranks/SM+intensity.csv"})
    EXPECT_TRUE(fs::exists(out.path() / f)) << f;
  EXPECT_FALSE(outcome.written.empty());

  // the report medians come from the per-fold values of each evaluation
  std::map<std::string, std::vector<double>> per_spec;
  for (const auto& e : fs::directory_iterator(out.path() / "evaluation")) {
    const auto r = load_evaluation(e.path().string());
    double sum = 0;
    for (const auto& f : r.folds) sum += f.scores.f_measure;
    per_spec[r.spec].push_back(sum / static_cast<double>(r.folds.size()));
  }
  std::vector<EvaluationResult> loaded;
  for (const auto& e : fs::directory_iterator(out.path() / "evaluation")) loaded.push_back(load_evaluation(e.path().string()));
  for (const auto& s : summarize_evaluations(loaded)) {
    auto v = per_spec.at(s.spec);
    std::sort(v.begin(), v.end());
    EXPECT_NEAR(s.f_median, v[1], 1e-12) << s.spec;
  }
}

TEST(Experiment, RerunIsByteIdentical) {
  test::TempDir a("det-a"), b("det-b");
  run_experiment(small_config(a.path(), {"SM+none", "PM+none", "DCBM+none"}));
  run_experiment(small_config(b.path(), {"SM+none", "PM+none", "DCBM+none"}));
  const auto sa = snapshot(a.path()), sb = snapshot(b.path());
  ASSERT_EQ(sa.size(), sb.size());
  for (const auto& [name, content] : sa) EXPECT_EQ(content, sb.at(name)) << name;
}

TEST(Experiment, ResumeKeepsUpstreamArtifacts) {
  test::TempDir out("resume");
  const auto config = small_config(out.path(), {"SM+none"});
  run_experiment(config);
  const auto metrics = out.path() / "metrics.csv";
  const auto old_time = fs::last_write_time(metrics) - std::chrono::hours(24);
  fs::last_write_time(metrics, old_time);
  const auto before = snapshot(out.path());
  fs::remove_all(out.path() / "evaluation");
  fs::remove(out.path() / "report.md");
  RunOptions resume;
  resume.resume = true;
  run_experiment(config, resume);
  EXPECT_EQ(fs::last_write_time(metrics), old_time);
  EXPECT_EQ(snapshot(out.path()), before);
}

TEST(Experiment, StageErrorNamesStageAndKey) {
  test::TempDir out("fail");
  auto config = small_config(out.path(), {"SM+none"});
  config.releases[1].source = (out.path() / "missing").string();
  try {
    run_experiment(config);
    FAIL() << "expected StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "extract");
    EXPECT_EQ(e.key(), "r2");
  }
}

TEST(Experiment, ThresholdOverrideChangesDetection) {
  test::TempDir out("thr");
  auto config = small_config(out.path(), {"SM+none"});
  const auto thr = out.write("thr.json", R"({"GodClass.LOCNAMM": {"op": ">=", "value": 10000}})");
  config.thresholds = thr.string();
  run_stages(config, Stage::Detect);
  const auto smells = test::slurp(out.path() / "smells.csv");
  EXPECT_EQ(smells.find("GodClass"), std::string::npos);
  EXPECT_NE(smells.find("DataClass"), std::string::npos);
}

#ifdef SMELLSCOPE_CLI
namespace {
int cli(const std::string& args) {
  const auto cmd = std::string(SMELLSCOPE_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
}  // namespace

TEST(Cli, ExitCodes) {
  test::TempDir dir("cli");
  const auto bad = dir.write("bad.json", R"({"project": "x", "releases": [{"tag": "a", "source": "."}],
      "history": {"log": "h"}, "specs": ["SM"], "cv": {"k": 1}})");
  EXPECT_EQ(cli("run --config " + bad.string()), 1);
  EXPECT_EQ(cli("nonsense"), 1);
  EXPECT_EQ(cli("report --out " + dir.str()), 2);
  EXPECT_EQ(cli("detect --config " + fixture_config() + " --out " + (dir.path() / "o").string()), 0);
  EXPECT_TRUE(fs::exists(dir.path() / "o" / "smells.csv"));
  EXPECT_FALSE(fs::exists(dir.path() / "o" / "history_features.csv"));
  EXPECT_EQ(cli("mine --config " + fixture_config() + " --out " + (dir.path() / "o").string()), 0);
  EXPECT_TRUE(fs::exists(dir.path() / "o" / "history_features.csv"));
}
#endif
