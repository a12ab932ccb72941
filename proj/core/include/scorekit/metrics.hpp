#pragma once

#include <span>

namespace scorekit {

// Mann-Whitney AUC of scores against binary labels (1 = event). Ties count
// one half via midranks. Throws SingleClassError unless both classes appear.
double auc(std::span<const double> scores, std::span<const int> labels);

// Mean negative log-likelihood of probabilistic scores; scores are clipped
// to [1e-12, 1 - 1e-12] first.
double log_loss(std::span<const double> scores, std::span<const int> labels);

}  // namespace scorekit
