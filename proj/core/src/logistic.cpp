#include "scorekit/logistic.hpp"

#include <algorithm>
#include <cmath>

#include "scorekit/errors.hpp"

namespace scorekit {

namespace {

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Eigen::VectorXd probabilities(const Eigen::MatrixXd& X, const Eigen::VectorXd& beta) {
  Eigen::VectorXd eta = X * beta;
  for (Eigen::Index i = 0; i < eta.size(); ++i) eta[i] = sigmoid(eta[i]);
  return eta;
}

}  // namespace

EncodedDesign one_hot_design(const std::vector<std::vector<double>>& columns,
                             const std::vector<BinningScheme>& schemes) {
  if (columns.size() != schemes.size()) {
    throw LengthMismatchError("one column per scheme required");
  }
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  EncodedDesign design;
  design.encoding = Encoding::one_hot;

  // Reference cell: the most populated bin (lowest index on ties).
  std::vector<int> reference(schemes.size(), 0);
  int total_cols = 0;
  for (std::size_t f = 0; f < schemes.size(); ++f) {
    std::int64_t best = -1;
    for (int b = 0; b < schemes[f].n_bins(); ++b) {
      if (schemes[f].bins[b].total() > best) {
        best = schemes[f].bins[b].total();
        reference[f] = b;
      }
    }
    total_cols += schemes[f].n_bins() - 1;
  }

  design.X = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), total_cols);
  int col = 0;
  for (std::size_t f = 0; f < schemes.size(); ++f) {
    if (columns[f].size() != n) {
      throw LengthMismatchError("feature columns differ in length");
    }
    const int block_begin = col;
    std::vector<int> bin_to_col(schemes[f].n_bins(), -1);
    for (int b = 0; b < schemes[f].n_bins(); ++b) {
      if (b == reference[f]) continue;
      bin_to_col[b] = col;
      design.column_names.push_back(schemes[f].feature_id + "=bin" +
                                    std::to_string(b));
      ++col;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int b = assign_bin(schemes[f], columns[f][i]);
      if (bin_to_col[b] >= 0) {
        design.X(static_cast<Eigen::Index>(i), bin_to_col[b]) = 1.0;
      }
    }
    design.feature_blocks.emplace_back(block_begin, col);
  }
  return design;
}

EncodedDesign woe_design(const std::vector<std::vector<double>>& columns,
                         const std::vector<BinningScheme>& schemes,
                         const std::vector<WoeTable>& tables) {
  if (columns.size() != schemes.size() || tables.size() != schemes.size()) {
    throw LengthMismatchError("columns, schemes and tables must align");
  }
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  EncodedDesign design;
  design.encoding = Encoding::woe;
  design.X = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                   static_cast<Eigen::Index>(schemes.size()));
  for (std::size_t f = 0; f < schemes.size(); ++f) {
    if (columns[f].size() != n) {
      throw LengthMismatchError("feature columns differ in length");
    }
    design.column_names.push_back(schemes[f].feature_id);
    design.feature_blocks.emplace_back(static_cast<int>(f),
                                       static_cast<int>(f) + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const int b = assign_bin(schemes[f], columns[f][i]);
      design.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f)) =
          tables[f].bins[static_cast<std::size_t>(b)].woe;
    }
  }
  return design;
}

double logistic_log_likelihood(const Eigen::MatrixXd& X,
                               const Eigen::VectorXd& beta,
                               std::span<const int> y) {
  const Eigen::VectorXd eta = X * beta;
  double ll = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    // log(1 + e^eta) computed stably on both tails
    const double log1pexp = eta[i] > 0.0
                                ? eta[i] + std::log1p(std::exp(-eta[i]))
                                : std::log1p(std::exp(eta[i]));
    ll += (y[static_cast<std::size_t>(i)] != 0 ? eta[i] : 0.0) - log1pexp;
  }
  return ll;
}

Eigen::VectorXd logistic_score(const Eigen::MatrixXd& X,
                               const Eigen::VectorXd& beta,
                               std::span<const int> y) {
  Eigen::VectorXd resid = -probabilities(X, beta);
  for (Eigen::Index i = 0; i < resid.size(); ++i) {
    resid[i] += y[static_cast<std::size_t>(i)] != 0 ? 1.0 : 0.0;
  }
  return X.transpose() * resid;
}

namespace {

struct IrlsResult {
  Eigen::VectorXd beta;
  Eigen::VectorXd se;
  bool converged = false;
  int iterations = 0;
};

IrlsResult irls(const Eigen::MatrixXd& X, std::span<const int> y,
                const LogisticFitConfig& config, double ridge) {
  const Eigen::Index p = X.cols();
  IrlsResult result;
  result.beta = Eigen::VectorXd::Zero(p);
  double ll = logistic_log_likelihood(X, result.beta, y) -
              0.5 * ridge * result.beta.squaredNorm();
  Eigen::MatrixXd info(p, p);
  for (int iter = 1; iter <= config.max_iter; ++iter) {
    result.iterations = iter;
    const Eigen::VectorXd prob = probabilities(X, result.beta);
    Eigen::VectorXd w = prob.array() * (1.0 - prob.array());
    w = w.cwiseMax(1e-10);
    Eigen::VectorXd score = logistic_score(X, result.beta, y);
    if (ridge > 0.0) score -= ridge * result.beta;
    if (score.cwiseAbs().maxCoeff() < config.tol) {
      result.converged = true;
      break;
    }
    info = X.transpose() * w.asDiagonal() * X;
    if (ridge > 0.0) info.diagonal().array() += ridge;
    const Eigen::VectorXd delta = info.ldlt().solve(score);
    // Step-halving keeps the penalized log-likelihood monotone.
    double step = 1.0;
    for (int half = 0; half < 30; ++half) {
      const Eigen::VectorXd candidate = result.beta + step * delta;
      const double cand_ll = logistic_log_likelihood(X, candidate, y) -
                             0.5 * ridge * candidate.squaredNorm();
      if (cand_ll >= ll - 1e-12) {
        result.beta = candidate;
        ll = cand_ll;
        break;
      }
      step *= 0.5;
    }
    if (ridge == 0.0 && result.beta.cwiseAbs().maxCoeff() > 30.0) {
      result.converged = false;
      result.iterations = -1;  // separation signal to the caller
      return result;
    }
  }
  const Eigen::VectorXd prob = probabilities(X, result.beta);
  Eigen::VectorXd w = prob.array() * (1.0 - prob.array());
  w = w.cwiseMax(1e-10);
  info = X.transpose() * w.asDiagonal() * X;
  if (ridge > 0.0) info.diagonal().array() += ridge;
  const Eigen::MatrixXd cov = info.inverse();
  result.se = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
  return result;
}

}  // namespace

LogisticModel fit_logistic(const Eigen::MatrixXd& X, std::span<const int> y,
                           const LogisticFitConfig& config) {
  if (static_cast<std::size_t>(X.rows()) != y.size()) {
    throw LengthMismatchError("design rows and labels differ in length");
  }
  Eigen::MatrixXd design;
  if (config.include_intercept) {
    design.resize(X.rows(), X.cols() + 1);
    design.col(0).setOnes();
    design.rightCols(X.cols()) = X;
  } else {
    design = X;
  }
  if (design.rows() <= design.cols()) {
    throw RankDeficientError("need more rows than columns");
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < design.cols()) {
    throw RankDeficientError("design is rank deficient");
  }

  IrlsResult fit = irls(design, y, config, 0.0);
  bool separation = false;
  if (fit.iterations == -1) {
    separation = true;
    fit = irls(design, y, config, 1e-6);
  }

  LogisticModel model;
  model.has_intercept = config.include_intercept;
  model.converged = fit.converged;
  model.iterations = fit.iterations;
  model.separation = separation;
  if (config.include_intercept) {
    model.intercept = fit.beta[0];
    model.intercept_se = fit.se[0];
    model.coefficients = fit.beta.tail(fit.beta.size() - 1);
    model.coef_se = fit.se.tail(fit.se.size() - 1);
  } else {
    model.coefficients = fit.beta;
    model.coef_se = fit.se;
  }
  return model;
}

Eigen::VectorXd LogisticModel::linear_scores(const Eigen::MatrixXd& X) const {
  Eigen::VectorXd eta = X * coefficients;
  if (has_intercept) eta.array() += intercept;
  return eta;
}

Eigen::VectorXd LogisticModel::predict_proba(const Eigen::MatrixXd& X) const {
  Eigen::VectorXd eta = linear_scores(X);
  for (Eigen::Index i = 0; i < eta.size(); ++i) eta[i] = sigmoid(eta[i]);
  return eta;
}

LogisticModel fit_woe_lr(const EncodedDesign& design, std::span<const int> labels,
                         const LogisticFitConfig& config) {
  if (design.encoding != Encoding::woe) {
    throw InvalidConfigError("fit_woe_lr expects a WoE-encoded design");
  }
  std::vector<int> good(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) good[i] = labels[i] == 0 ? 1 : 0;
  return fit_logistic(design.X, good, config);
}

Eigen::VectorXd predict_default_woe(const LogisticModel& model,
                                    const Eigen::MatrixXd& X) {
  return Eigen::VectorXd::Ones(X.rows()) - model.predict_proba(X);
}

}  // namespace scorekit
