#pragma once

#include <span>
#include <vector>

#include "scorekit/binning.hpp"

namespace scorekit {

// One depth-1 weak learner: rows with feature <= threshold take left_value.
// Missing readings go right (the missing bin sits after the last interval).
struct Stump {
  int feature = 0;
  double threshold = 0.0;
  double left_value = 0.0;
  double right_value = 0.0;
};

struct BoostConfig {
  int rounds = 100;
  double learning_rate = 0.1;
  // +1 score non-decreasing in the feature, -1 non-increasing, 0 free.
  // Empty means all free.
  std::vector<int> monotone_directions;
};

// Additive logistic-loss ensemble on the default-odds orientation
// (higher raw score = higher default probability).
struct StumpEnsemble {
  double base_score = 0.0;
  double learning_rate = 0.1;
  std::vector<Stump> stumps;
  std::vector<int> monotone_direction;
  bool stopped_early = false;  // no admissible improving stump remained

  int rounds() const { return static_cast<int>(stumps.size()); }
  std::vector<double> raw_scores(const std::vector<std::vector<double>>& columns) const;
  std::vector<double> predict_proba(const std::vector<std::vector<double>>& columns) const;
};

// Gradient boosting where every round picks the (feature, scheme cut point)
// stump minimizing squared error to the current negative gradients, among
// stumps satisfying the monotone clamp; leaf values are Newton steps
// (sum of gradients over sum of hessians), collapsed to a shared value when
// the raw steps would violate the direction. Ties break toward the lowest
// feature index, then the lowest threshold.
StumpEnsemble fit_stump_boosting(const std::vector<BinningScheme>& schemes,
                                 const std::vector<std::vector<double>>& columns,
                                 std::span<const int> labels,
                                 const BoostConfig& config);

}  // namespace scorekit
