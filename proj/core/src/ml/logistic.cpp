#include "smellscope/ml/logistic.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "smellscope/common/error.hpp"

namespace smellscope {

namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double objective(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const Eigen::VectorXd& beta, double lambda) {
  const Eigen::VectorXd eta = X * beta;
  double ll = 0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) ll += y(i) * eta(i) - softplus(eta(i));
  return ll - 0.5 * lambda * beta.tail(beta.size() - 1).squaredNorm();
}

}  // namespace

double penalized_log_likelihood(const std::vector<std::vector<double>>& z, const std::vector<bool>& y,
                                double intercept, const std::vector<double>& coefficients, double lambda) {
  double ll = 0, penalty = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double eta = intercept;
    for (std::size_t j = 0; j < coefficients.size(); ++j) eta += coefficients[j] * z[i][j];
    ll += (y[i] ? eta : 0.0) - softplus(eta);
  }
  for (double w : coefficients) penalty += w * w;
  return ll - 0.5 * lambda * penalty;
}

LogisticModel train_logistic(const std::vector<std::vector<double>>& x, const std::vector<bool>& y,
                             const std::vector<std::string>& features, const LogisticOptions& options) {
  if (x.size() != y.size()) throw ContractViolation("design matrix and labels differ in length");
  if (options.lambda < 0) throw ContractViolation("lambda must be non-negative");
  std::size_t pos = 0;
  for (bool b : y) pos += b;
  if (pos == 0 || pos == y.size()) throw DegenerateTrainingError("training data has a single label");

  const auto n = static_cast<Eigen::Index>(x.size());
  const auto p = static_cast<Eigen::Index>(features.size());
  LogisticModel m;
  m.features = features;
  m.lambda = options.lambda;
  m.means.assign(features.size(), 0.0);
  m.scales.assign(features.size(), 1.0);
  for (std::size_t j = 0; j < features.size(); ++j) {
    double s = 0;
    for (const auto& row : x) {
      if (row.size() != features.size()) throw ContractViolation("row width differs from feature count");
      s += row[j];
    }
    m.means[j] = s / static_cast<double>(n);
    double ss = 0;
    for (const auto& row : x) ss += (row[j] - m.means[j]) * (row[j] - m.means[j]);
    const double sd = std::sqrt(ss / static_cast<double>(n));
    m.scales[j] = sd > 0 ? sd : 1.0;
  }

  Eigen::MatrixXd X(n, p + 1);
  Eigen::VectorXd Y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      X(i, j + 1) = (x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - m.means[static_cast<std::size_t>(j)]) /
                    m.scales[static_cast<std::size_t>(j)];
    }
    Y(i) = y[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
  }

  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(p + 1, options.lambda);
  penalty(0) = 0;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p + 1);
  beta(0) = std::log(static_cast<double>(pos) / static_cast<double>(y.size() - pos));
  double current = objective(X, Y, beta, options.lambda);

  for (m.iterations = 0; m.iterations < options.max_iterations; ++m.iterations) {
    Eigen::VectorXd prob(n);
    for (Eigen::Index i = 0; i < n; ++i) prob(i) = sigmoid(X.row(i).dot(beta));
    const Eigen::VectorXd grad = X.transpose() * (Y - prob) - penalty.cwiseProduct(beta);
    if (grad.lpNorm<Eigen::Infinity>() < options.tolerance) {
      m.converged = true;
      break;
    }
    const Eigen::VectorXd w = prob.cwiseProduct(Eigen::VectorXd::Ones(n) - prob);
    Eigen::MatrixXd H = X.transpose() * w.asDiagonal() * X;
    H.diagonal() += penalty;
    H.diagonal().array() += 1e-12;
    const Eigen::VectorXd step = H.ldlt().solve(grad);

    double t = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
      const Eigen::VectorXd candidate = beta + t * step;
      const double value = objective(X, Y, candidate, options.lambda);
      if (value >= current) {
        beta = candidate;
        improved = value - current > 1e-12 * (1.0 + std::abs(current));
        current = value;
        break;
      }
    }
    // no measurable progress left: the gradient is at rounding level
    if (!improved) {
      m.converged = true;
      break;
    }
  }

  m.intercept = beta(0);
  m.coefficients.assign(beta.data() + 1, beta.data() + beta.size());
  return m;
}

LogisticModel train_logistic(const Dataset& d, double lambda, std::uint64_t seed) {
  std::vector<std::vector<double>> x;
  std::vector<bool> y;
  for (const auto& r : d.rows) {
    x.push_back(r.values);
    y.push_back(r.label);
  }
  LogisticOptions options;
  options.lambda = lambda;
  auto m = train_logistic(x, y, d.features, options);
  m.seed = seed;
  return m;
}

double predict(const LogisticModel& m, const std::vector<double>& row) {
  if (row.size() != m.features.size()) throw ContractViolation("row width differs from model features");
  double eta = m.intercept;
  for (std::size_t j = 0; j < row.size(); ++j) eta += m.coefficients[j] * (row[j] - m.means[j]) / m.scales[j];
  return sigmoid(eta);
}

double predict(const LogisticModel& m, const std::map<std::string, double>& row) {
  std::vector<double> values;
  for (const auto& f : m.features) {
    const auto it = row.find(f);
    if (it == row.end()) throw ContractViolation("row lacks model feature '" + f + "'");
    values.push_back(it->second);
  }
  return predict(m, values);
}

}  // namespace smellscope
