#include "smellscope/ml/cross_validation.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "smellscope/common/error.hpp"
#include "smellscope/ml/logistic.hpp"

namespace smellscope {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = 0;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

std::vector<int> stratified_folds(const std::vector<bool>& labels, int k, std::uint64_t seed) {
  if (k < 2) throw StratificationError("k must be at least 2");
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < labels.size(); ++i) (labels[i] ? pos : neg).push_back(i);
  if (pos.size() < static_cast<std::size_t>(k) || neg.size() < static_cast<std::size_t>(k)) {
    throw StratificationError("each label needs at least " + std::to_string(k) + " rows (positives " +
                              std::to_string(pos.size()) + ", negatives " + std::to_string(neg.size()) + ")");
  }
  std::mt19937_64 rng(seed);
  seeded_shuffle(pos, rng);
  seeded_shuffle(neg, rng);
  std::vector<int> fold(labels.size(), 0);
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < pos.size(); ++i) fold[pos[i]] = static_cast<int>(i % uk);
  for (std::size_t i = 0; i < neg.size(); ++i) fold[neg[i]] = static_cast<int>((pos.size() + i) % uk);
  return fold;
}

Classifier logistic_classifier(double lambda) {
  return [lambda](const TrainTestSplit& s) {
    std::vector<std::string> names(s.x_train.empty() ? 0 : s.x_train.front().size());
    LogisticOptions options;
    options.lambda = lambda;
    const auto model = train_logistic(s.x_train, s.y_train, names, options);
    std::vector<double> out;
    out.reserve(s.x_test.size());
    for (const auto& row : s.x_test) out.push_back(predict(model, row));
    return out;
  };
}

namespace {

struct RepeatOutcome {
  std::vector<int> folds;
  std::vector<FoldResult> results;
  std::vector<bool> predicted;
};

RepeatOutcome run_repeat(const Dataset& d, const std::vector<bool>& labels, const CvOptions& o, int repeat,
                         std::uint64_t seed, const Classifier& classifier) {
  RepeatOutcome out;
  out.folds = stratified_folds(labels, o.k, seed);
  out.predicted.assign(d.rows.size(), false);
  for (int f = 0; f < o.k; ++f) {
    std::vector<std::vector<double>> x_train, x_test;
    std::vector<bool> y_train;
    std::vector<std::size_t> test_rows;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      if (out.folds[i] == f) {
        x_test.push_back(d.rows[i].values);
        test_rows.push_back(i);
      } else {
        x_train.push_back(d.rows[i].values);
        y_train.push_back(labels[i]);
      }
    }
    const auto scores = classifier({x_train, y_train, x_test});
    if (scores.size() != test_rows.size()) throw ContractViolation("classifier returned the wrong number of scores");
    FoldResult r;
    r.repeat = repeat;
    r.fold = f;
    std::vector<bool> y_test;
    for (std::size_t t = 0; t < test_rows.size(); ++t) {
      const bool truth = labels[test_rows[t]];
      const bool guess = scores[t] >= o.threshold;
      y_test.push_back(truth);
      out.predicted[test_rows[t]] = guess;
      if (guess && truth) ++r.counts.tp;
      else if (guess) ++r.counts.fp;
      else if (truth) ++r.counts.fn;
      else ++r.counts.tn;
    }
    r.scores = confusion_metrics(r.counts);
    r.auc = auc_roc(scores, y_test);
    out.results.push_back(r);
  }
  return out;
}

}  // namespace

EvaluationResult cross_validate(const Dataset& d, const CvOptions& options) {
  return cross_validate(d, options, logistic_classifier(options.lambda));
}

EvaluationResult cross_validate(const Dataset& d, const CvOptions& options, const Classifier& classifier) {
  if (options.repeats < 1) throw ContractViolation("repeats must be at least 1");
  if (d.rows.empty()) throw EmptyDatasetError("cannot cross-validate an empty dataset");
  std::vector<bool> labels;
  for (const auto& r : d.rows) labels.push_back(r.label);

  EvaluationResult result;
  result.spec = d.spec.name();
  result.release = d.rows.front().release;
  result.features = d.features;
  result.options = options;
  for (int r = 0; r < options.repeats; ++r) result.seeds.push_back(options.base_seed + static_cast<std::uint64_t>(r));

  std::vector<RepeatOutcome> outcomes(static_cast<std::size_t>(options.repeats));
  const int threads = std::max(1, options.threads);
  for (int start = 0; start < options.repeats; start += threads) {
    std::vector<std::future<RepeatOutcome>> batch;
    const int end = std::min(options.repeats, start + threads);
    for (int r = start; r < end; ++r) {
      const auto seed = result.seeds[static_cast<std::size_t>(r)];
      if (threads == 1) {
        outcomes[static_cast<std::size_t>(r)] = run_repeat(d, labels, options, r, seed, classifier);
      } else {
        batch.push_back(std::async(std::launch::async, [&, r, seed] {
          return run_repeat(d, labels, options, r, seed, classifier);
        }));
      }
    }
    for (std::size_t b = 0; b < batch.size(); ++b) outcomes[static_cast<std::size_t>(start) + b] = batch[b].get();
  }

  result.positive_votes.assign(d.rows.size(), 0);
  double p = 0, rc = 0, f = 0, auc = 0;
  for (auto& o : outcomes) {
    for (const auto& fr : o.results) {
      p += fr.scores.precision;
      rc += fr.scores.recall;
      f += fr.scores.f_measure;
      auc += fr.auc;
      result.folds.push_back(fr);
    }
    for (std::size_t i = 0; i < d.rows.size(); ++i) result.positive_votes[i] += o.predicted[i] ? 1 : 0;
    result.fold_assignments.push_back(std::move(o.folds));
  }
  const double n = static_cast<double>(result.folds.size());
  result.precision = p / n;
  result.recall = rc / n;
  result.f_measure = f / n;
  result.auc_roc = auc / n;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    const auto key = d.rows[i].release + "/" + d.rows[i].class_name;
    result.row_keys.push_back(key);
    if (d.rows[i].label && 2 * result.positive_votes[i] > options.repeats) result.true_positives.push_back(key);
  }
  return result;
}

}  // namespace smellscope
