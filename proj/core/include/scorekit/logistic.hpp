#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "scorekit/binning.hpp"
#include "scorekit/woe.hpp"

namespace scorekit {

enum class Encoding { one_hot, woe };

// Design matrix produced from binned features. One-hot drops each feature's
// most populated bin as the reference cell; WoE maps each reading to its
// bin's WoE score, one column per feature.
struct EncodedDesign {
  Encoding encoding = Encoding::one_hot;
  Eigen::MatrixXd X;
  std::vector<std::string> column_names;
  std::vector<std::pair<int, int>> feature_blocks;  // [begin, end) per feature
};

EncodedDesign one_hot_design(const std::vector<std::vector<double>>& columns,
                             const std::vector<BinningScheme>& schemes);

EncodedDesign woe_design(const std::vector<std::vector<double>>& columns,
                         const std::vector<BinningScheme>& schemes,
                         const std::vector<WoeTable>& tables);

struct LogisticFitConfig {
  int max_iter = 100;
  double tol = 1e-8;  // on the max absolute score component
  bool include_intercept = true;
};

struct LogisticModel {
  double intercept = 0.0;
  Eigen::VectorXd coefficients;
  double intercept_se = 0.0;
  Eigen::VectorXd coef_se;  // from the inverse observed information diagonal
  bool has_intercept = true;
  bool converged = false;
  int iterations = 0;
  bool separation = false;  // diverging fit re-solved with ridge 1e-6

  Eigen::VectorXd linear_scores(const Eigen::MatrixXd& X) const;
  Eigen::VectorXd predict_proba(const Eigen::MatrixXd& X) const;
};

// Maximum-likelihood logistic fit by iteratively reweighted least squares.
// Requires full column rank and more rows than columns. Complete separation
// (any |beta| drifting past 30) triggers a ridge-1e-6 refit with the
// separation flag set.
LogisticModel fit_logistic(const Eigen::MatrixXd& X, std::span<const int> y,
                           const LogisticFitConfig& config = {});

// WoE-encoded logistic scorecard. Fitted on the good-odds orientation, so
// well-estimated features carry coefficients near +1; the predicted default
// probability of a row is 1 - sigma(eta).
LogisticModel fit_woe_lr(const EncodedDesign& design, std::span<const int> labels,
                         const LogisticFitConfig& config = {});

Eigen::VectorXd predict_default_woe(const LogisticModel& model,
                                    const Eigen::MatrixXd& X);

// Log-likelihood and score of the logistic model on an explicit design
// (augment an intercept column yourself if you want one). Shared by the
// constrained scorecard solver and by gradient-check tests.
double logistic_log_likelihood(const Eigen::MatrixXd& X,
                               const Eigen::VectorXd& beta,
                               std::span<const int> y);
Eigen::VectorXd logistic_score(const Eigen::MatrixXd& X,
                               const Eigen::VectorXd& beta,
                               std::span<const int> y);

}  // namespace scorekit
