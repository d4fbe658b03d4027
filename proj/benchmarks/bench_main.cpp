#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "smellscope/intensity/intensity.hpp"
#include "smellscope/metrics/extractor.hpp"
#include "smellscope/metrics/java_syntax.hpp"
#include "smellscope/metrics/metrics.hpp"
#include "smellscope/ml/cross_validation.hpp"
#include "smellscope/ml/stats.hpp"
#include "smellscope/smells/detector.hpp"

using namespace smellscope;

namespace {

const std::string kRelease = std::string(SMELLSCOPE_FIXTURE_DIR) + "/project/releases/r1";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<EntityMetricVector> random_release(std::size_t classes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<EntityMetricVector> out;
  for (std::size_t i = 0; i < classes; ++i) {
    const auto cls = "p.C" + std::to_string(i);
    for (auto kind : {EntityKind::Class, EntityKind::Method}) {
      EntityMetricVector v;
      v.release = "r1";
      v.kind = kind;
      v.qualified_name = kind == EntityKind::Class ? cls : cls + "#m()";
      v.package = "p";
      for (std::size_t m = 0; m < kMetricCount; ++m) {
        const auto metric = static_cast<Metric>(m);
        if (!is_applicable(kind, metric)) continue;
        v.set(metric, is_ratio_metric(metric) ? u(rng) : std::floor(u(rng) * (metric == Metric::LOCNAMM ? 350 : 40)));
      }
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

static void BM_ParseFile(benchmark::State& state) {
  const auto path = kRelease + "/com/shop/service/OrderManager.java";
  const auto source = read_file(path);
  for (auto _ : state) benchmark::DoNotOptimize(java::parse_file(source, path));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_ParseFile);

static void BM_ExtractRelease(benchmark::State& state) {
  for (auto _ : state) {
    const auto model = parse_release(kRelease, "r1");
    benchmark::DoNotOptimize(compute_release_metrics(model));
  }
}
BENCHMARK(BM_ExtractRelease)->Unit(benchmark::kMillisecond);

static void BM_DetectSmells(benchmark::State& state) {
  const auto release = random_release(static_cast<std::size_t>(state.range(0)), 1);
  const auto thresholds = ThresholdConfig::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(detect_smells(release, thresholds));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(release.size()));
}
BENCHMARK(BM_DetectSmells)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_Intensity(benchmark::State& state) {
  const auto release = random_release(static_cast<std::size_t>(state.range(0)), 2);
  const auto instances = detect_smells(release, ThresholdConfig::defaults());
  for (auto _ : state) {
    auto scored = instances;
    benchmark::DoNotOptimize(release_intensities(release, scored));
  }
}
BENCHMARK(BM_Intensity)->Arg(1000)->Arg(10000);

static void BM_AucRoc(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> scores;
  std::vector<bool> labels;
  for (int i = 0; i < state.range(0); ++i) {
    scores.push_back(u(rng));
    labels.push_back(u(rng) < 0.3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(auc_roc(scores, labels));
}
BENCHMARK(BM_AucRoc)->Arg(100)->Arg(10000);

static void BM_CrossValidate(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g(0, 1);
  Dataset d;
  d.spec = ModelSpec::parse("SM+none");
  d.features = {"LOC", "CBO", "RFC", "DIT", "LCOM"};
  for (int i = 0; i < state.range(0); ++i) {
    const bool label = i % 10 < 3;
    d.rows.push_back({"r1", "C" + std::to_string(i), {g(rng) + label, g(rng), g(rng), g(rng), g(rng)}, false, label});
  }
  CvOptions o;
  o.repeats = 10;
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(d, o));
}
BENCHMARK(BM_CrossValidate)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
