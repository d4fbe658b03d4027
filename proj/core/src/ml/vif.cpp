#include "smellscope/ml/vif.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "smellscope/common/error.hpp"

namespace smellscope {

std::vector<double> variance_inflation_factors(const std::vector<std::vector<double>>& columns) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t p = columns.size();
  std::vector<double> out(p, 1.0);
  if (p < 2) return out;
  const auto n = static_cast<Eigen::Index>(columns.front().size());
  for (std::size_t j = 0; j < p; ++j) {
    Eigen::VectorXd y(n);
    Eigen::MatrixXd X(n, static_cast<Eigen::Index>(p));
    for (Eigen::Index i = 0; i < n; ++i) {
      y(i) = columns[j][static_cast<std::size_t>(i)];
      X(i, 0) = 1.0;
      Eigen::Index c = 1;
      for (std::size_t k = 0; k < p; ++k) {
        if (k != j) X(i, c++) = columns[k][static_cast<std::size_t>(i)];
      }
    }
    const double ybar = y.mean();
    const double sst = (y.array() - ybar).square().sum();
    if (sst <= 1e-12 * std::max(1.0, y.squaredNorm())) {
      out[j] = kInf;
      continue;
    }
    const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
    const double ssr = (y - X * beta).squaredNorm();
    const double r2 = 1.0 - ssr / sst;
    out[j] = r2 >= 1.0 - 1e-10 ? kInf : 1.0 / (1.0 - r2);
  }
  return out;
}

VifResult vif_filter(const Dataset& d, double threshold) {
  if (d.rows.size() < d.features.size() + 1) {
    throw ContractViolation("VIF needs at least features + 1 rows (" + std::to_string(d.rows.size()) + " rows, " +
                            std::to_string(d.features.size()) + " features)");
  }
  VifResult result{d, {}};
  auto& ds = result.dataset;
  while (ds.features.size() >= 2) {
    std::vector<std::vector<double>> columns(ds.features.size());
    for (const auto& r : ds.rows) {
      for (std::size_t j = 0; j < r.values.size(); ++j) columns[j].push_back(r.values[j]);
    }
    const auto vif = variance_inflation_factors(columns);
    std::size_t worst = 0;
    for (std::size_t j = 1; j < vif.size(); ++j) {
      if (vif[j] > vif[worst] || (vif[j] == vif[worst] && ds.features[j] > ds.features[worst])) worst = j;
    }
    if (!(vif[worst] > threshold)) break;
    result.removed.push_back(ds.features[worst]);
    ds.provenance.push_back("removed feature " + ds.features[worst] + ": VIF " +
                            (std::isinf(vif[worst]) ? std::string("inf") : std::to_string(vif[worst])));
    ds.features.erase(ds.features.begin() + static_cast<std::ptrdiff_t>(worst));
    for (auto& r : ds.rows) r.values.erase(r.values.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  return result;
}

}  // namespace smellscope
