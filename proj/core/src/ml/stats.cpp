#include "smellscope/ml/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smellscope/common/error.hpp"

namespace smellscope {

double f_measure(double precision, double recall) {
  return precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
}

ClassificationScores confusion_metrics(const ConfusionCounts& c) {
  ClassificationScores s;
  s.precision = c.tp + c.fp > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
  s.recall = c.tp + c.fn > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 0.0;
  s.f_measure = f_measure(s.precision, s.recall);
  return s;
}

double auc_roc(const std::vector<double>& scores, const std::vector<bool>& labels) {
  if (scores.size() != labels.size()) throw ContractViolation("scores and labels differ in length");
  const auto n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  // Twice the rank sum of positives, using average ranks for ties; stays integral.
  double twice_rank_sum = 0;
  double n_pos = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double twice_avg_rank = static_cast<double>(i + 1 + j);  // (i+1 + j) is 2 * mean of ranks i+1..j
    for (std::size_t t = i; t < j; ++t) {
      if (labels[order[t]]) {
        twice_rank_sum += twice_avg_rank;
        n_pos += 1;
      }
    }
    i = j;
  }
  const double n_neg = static_cast<double>(n) - n_pos;
  if (n_pos == 0 || n_neg == 0) throw UndefinedMetricError("AUC needs both labels");
  const double twice_u = twice_rank_sum - n_pos * (n_pos + 1);
  return twice_u / (2 * n_pos * n_neg);
}

double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw ContractViolation("Cliff's delta needs two non-empty samples");
  std::vector<double> sorted_b = b;
  std::sort(sorted_b.begin(), sorted_b.end());
  long long dominance = 0;
  for (double x : a) {
    const auto lower = std::lower_bound(sorted_b.begin(), sorted_b.end(), x) - sorted_b.begin();
    const auto upper = sorted_b.end() - std::upper_bound(sorted_b.begin(), sorted_b.end(), x);
    dominance += lower - upper;
  }
  return static_cast<double>(dominance) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0;
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0;
  const double m = mean(v);
  double ss = 0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double skewness(const std::vector<double>& v) {
  if (v.size() < 2) return 0;
  const double m = mean(v);
  double m2 = 0, m3 = 0;
  for (double x : v) {
    const double d = x - m;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(v.size());
  m3 /= static_cast<double>(v.size());
  if (m2 <= 1e-300) return 0;
  return m3 / std::pow(m2, 1.5);
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) throw ContractViolation("quantile of an empty sample");
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

OverlapResult overlap_analysis(const std::set<std::string>& tp_a, const std::set<std::string>& tp_b,
                               const std::set<std::string>& universe) {
  for (const auto* s : {&tp_a, &tp_b}) {
    for (const auto& x : *s) {
      if (!universe.count(x)) throw ContractViolation("'" + x + "' is outside the overlap universe");
    }
  }
  std::size_t both = 0;
  for (const auto& x : tp_a) both += tp_b.count(x);
  const std::size_t only_a = tp_a.size() - both;
  const std::size_t only_b = tp_b.size() - both;
  const std::size_t uni = both + only_a + only_b;
  if (uni == 0) return {};
  const double u = static_cast<double>(uni);
  return {100.0 * static_cast<double>(both) / u, 100.0 * static_cast<double>(only_a) / u,
          100.0 * static_cast<double>(only_b) / u};
}

}  // namespace smellscope
