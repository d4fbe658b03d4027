#include "smellscope/ml/scott_knott.hpp"

#include <algorithm>
#include <boost/math/distributions/fisher_f.hpp>
#include <cmath>

#include "smellscope/common/error.hpp"
#include "smellscope/ml/stats.hpp"

namespace smellscope {

namespace {

struct Group {
  std::string name;
  std::vector<double> values;
  double mean = 0;
};

std::vector<double> pooled(const std::vector<Group>& g, std::size_t from, std::size_t to) {
  std::vector<double> out;
  for (std::size_t i = from; i < to; ++i) out.insert(out.end(), g[i].values.begin(), g[i].values.end());
  return out;
}

double sum_sq(const std::vector<double>& v, double m) {
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return s;
}

void split(const std::vector<Group>& g, std::size_t from, std::size_t to, double alpha,
           std::vector<std::pair<std::size_t, std::size_t>>& out) {
  if (to - from < 2) {
    out.emplace_back(from, to);
    return;
  }
  const auto all = pooled(g, from, to);
  const double grand = mean(all);
  double best_ssb = -1;
  std::size_t best_cut = from + 1;
  for (std::size_t cut = from + 1; cut < to; ++cut) {
    const auto left = pooled(g, from, cut);
    const auto right = pooled(g, cut, to);
    const double ml = mean(left), mr = mean(right);
    const double ssb = static_cast<double>(left.size()) * (ml - grand) * (ml - grand) +
                       static_cast<double>(right.size()) * (mr - grand) * (mr - grand);
    if (ssb > best_ssb + 1e-15) {
      best_ssb = ssb;
      best_cut = cut;
    }
  }
  const auto left = pooled(g, from, best_cut);
  const auto right = pooled(g, best_cut, to);
  const double ssw = sum_sq(left, mean(left)) + sum_sq(right, mean(right));
  const double df2 = static_cast<double>(all.size()) - 2.0;
  bool significant = false;
  if (best_ssb > 1e-12 * std::max(1.0, ssw)) {
    if (ssw <= 0 || df2 <= 0) {
      significant = ssw <= 0;
    } else {
      const double f = best_ssb / (ssw / df2);
      const boost::math::fisher_f dist(1.0, df2);
      significant = boost::math::cdf(boost::math::complement(dist, f)) < alpha;
    }
  }
  if (!significant) {
    out.emplace_back(from, to);
    return;
  }
  split(g, from, best_cut, alpha, out);
  split(g, best_cut, to, alpha, out);
}

}  // namespace

std::vector<std::vector<std::string>> scott_knott_esd(const std::map<std::string, std::vector<double>>& groups,
                                                      const ScottKnottOptions& options) {
  std::vector<Group> g;
  for (const auto& [name, values] : groups) {
    if (values.size() < 2) throw ContractViolation("group '" + name + "' needs at least two observations");
    g.push_back({name, values, 0});
  }
  if (g.empty()) return {};
  if (g.size() < 2) return {{g.front().name}};

  const bool skewed = std::any_of(g.begin(), g.end(), [&](const Group& x) {
    return skewness(x.values) > options.skew_threshold;
  });
  bool can_log = true;
  for (const auto& x : g) {
    for (double v : x.values) can_log = can_log && v > -1.0;
  }
  for (auto& x : g) {
    if (skewed && can_log) {
      for (double& v : x.values) v = std::log1p(v);
    }
    x.mean = mean(x.values);
  }
  std::sort(g.begin(), g.end(), [](const Group& a, const Group& b) {
    return a.mean != b.mean ? a.mean > b.mean : a.name < b.name;
  });

  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  split(g, 0, g.size(), options.alpha, ranges);

  if (options.merge_negligible) {
    for (bool merged = true; merged && ranges.size() > 1;) {
      merged = false;
      for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
        const double delta = cliffs_delta(pooled(g, ranges[i].first, ranges[i].second),
                                          pooled(g, ranges[i + 1].first, ranges[i + 1].second));
        if (std::abs(delta) < options.negligible_delta) {
          ranges[i].second = ranges[i + 1].second;
          ranges.erase(ranges.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          merged = true;
          break;
        }
      }
    }
  }

  std::vector<std::vector<std::string>> out;
  for (const auto& [from, to] : ranges) {
    std::vector<std::string> cluster;
    for (std::size_t i = from; i < to; ++i) cluster.push_back(g[i].name);
    out.push_back(std::move(cluster));
  }
  return out;
}

}  // namespace smellscope
