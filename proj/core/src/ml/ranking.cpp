#include "smellscope/ml/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "smellscope/common/csv.hpp"
#include "smellscope/common/error.hpp"
#include "smellscope/ml/cross_validation.hpp"
#include "smellscope/ml/stats.hpp"

namespace smellscope {

std::vector<int> equal_frequency_bins(const std::vector<double>& values, int bins) {
  if (bins < 1) throw ContractViolation("bins must be positive");
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const auto bin = std::min<std::size_t>(static_cast<std::size_t>(bins) - 1, i * static_cast<std::size_t>(bins) / n);
    for (std::size_t t = i; t < j; ++t) out[order[t]] = static_cast<int>(bin);
    i = j;
  }
  return out;
}

double entropy(const std::vector<int>& symbols) {
  std::map<int, double> counts;
  for (int s : symbols) counts[s] += 1;
  double h = 0;
  const double n = static_cast<double>(symbols.size());
  for (const auto& [s, c] : counts) h -= (c / n) * std::log2(c / n);
  return h;
}

double entropy(const std::vector<bool>& labels) {
  std::vector<int> s(labels.begin(), labels.end());
  return entropy(s);
}

double information_gain(const std::vector<int>& bins, const std::vector<bool>& labels) {
  if (bins.size() != labels.size()) throw ContractViolation("bins and labels differ in length");
  std::map<int, std::vector<bool>> parts;
  for (std::size_t i = 0; i < bins.size(); ++i) parts[bins[i]].push_back(labels[i]);
  double conditional = 0;
  const double n = static_cast<double>(bins.size());
  for (const auto& [b, ls] : parts) conditional += static_cast<double>(ls.size()) / n * entropy(ls);
  return std::max(0.0, entropy(labels) - conditional);
}

double gain_ratio(const std::vector<int>& bins, const std::vector<bool>& labels) {
  const double split = entropy(bins);
  return split > 0 ? information_gain(bins, labels) / split : 0.0;
}

namespace {

std::vector<double> column(const Dataset& d, std::size_t j, const std::vector<std::size_t>& rows) {
  std::vector<double> out;
  for (auto i : rows) out.push_back(d.rows[i].values[j]);
  return out;
}

}  // namespace

std::vector<FeatureGain> gain_ratio_rank(const Dataset& d, int bins) {
  std::vector<std::size_t> rows(d.rows.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<bool> labels;
  for (const auto& r : d.rows) labels.push_back(r.label);
  std::vector<FeatureGain> out;
  for (std::size_t j = 0; j < d.features.size(); ++j) {
    const auto b = equal_frequency_bins(column(d, j, rows), bins);
    out.push_back({d.features[j], gain_ratio(b, labels), information_gain(b, labels)});
  }
  std::sort(out.begin(), out.end(), [](const FeatureGain& a, const FeatureGain& b) {
    return a.gain_ratio != b.gain_ratio ? a.gain_ratio > b.gain_ratio : a.feature < b.feature;
  });
  return out;
}

std::vector<FeatureRankEntry> rank_features(const std::vector<Dataset>& datasets, const RankOptions& options) {
  std::map<std::string, std::vector<double>> gains;
  std::map<std::string, int> top_hits;
  for (std::size_t di = 0; di < datasets.size(); ++di) {
    const auto& d = datasets[di];
    for (const auto& g : gain_ratio_rank(d, options.bins)) {
      gains[g.feature].push_back(g.gain_ratio);
      top_hits[g.feature];
    }
    if (d.rows.empty() || d.features.empty()) continue;

    std::map<std::string, std::vector<double>> samples;
    std::mt19937_64 rng(options.seed + di);
    for (int s = 0; s < options.resamples; ++s) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < d.rows.size(); ++i) rows.push_back(bounded_draw(rng, d.rows.size()));
      std::vector<bool> labels;
      for (auto i : rows) labels.push_back(d.rows[i].label);
      for (std::size_t j = 0; j < d.features.size(); ++j) {
        samples[d.features[j]].push_back(gain_ratio(equal_frequency_bins(column(d, j, rows), options.bins), labels));
      }
    }
    if (options.resamples >= 2) {
      const auto clusters = scott_knott_esd(samples, options.scott_knott);
      if (!clusters.empty()) {
        for (const auto& f : clusters.front()) ++top_hits[f];
      }
    }
  }
  std::vector<FeatureRankEntry> out;
  const double n = static_cast<double>(datasets.size());
  for (const auto& [feature, values] : gains) {
    out.push_back({feature, mean(values), stddev(values), n > 0 ? 100.0 * top_hits[feature] / n : 0.0});
  }
  std::sort(out.begin(), out.end(), [](const FeatureRankEntry& a, const FeatureRankEntry& b) {
    return a.mean_gain != b.mean_gain ? a.mean_gain > b.mean_gain : a.feature < b.feature;
  });
  return out;
}

std::string ranks_table_string(const std::vector<FeatureRankEntry>& ranks) {
  std::ostringstream out;
  csv::write_record(out, {"feature", "mean_gain", "stddev", "sk_top_likelihood"});
  for (const auto& r : ranks) {
    csv::write_record(out, {r.feature, csv::format_number(r.mean_gain), csv::format_number(r.stddev),
                            csv::format_number(r.top_likelihood)});
  }
  return out.str();
}

}  // namespace smellscope
