#include "scorekit/boosting.hpp"

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

}  // namespace

std::vector<double> StumpEnsemble::raw_scores(
    const std::vector<std::vector<double>>& columns) const {
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  std::vector<double> score(n, base_score);
  for (const auto& stump : stumps) {
    const auto& col = columns[static_cast<std::size_t>(stump.feature)];
    for (std::size_t i = 0; i < n; ++i) {
      const bool left = !std::isnan(col[i]) && col[i] <= stump.threshold;
      score[i] += learning_rate * (left ? stump.left_value : stump.right_value);
    }
  }
  return score;
}

std::vector<double> StumpEnsemble::predict_proba(
    const std::vector<std::vector<double>>& columns) const {
  std::vector<double> score = raw_scores(columns);
  for (double& s : score) s = sigmoid(s);
  return score;
}

StumpEnsemble fit_stump_boosting(const std::vector<BinningScheme>& schemes,
                                 const std::vector<std::vector<double>>& columns,
                                 std::span<const int> labels,
                                 const BoostConfig& config) {
  if (config.rounds < 1) throw InvalidConfigError("rounds must be >= 1");
  if (!(config.learning_rate > 0.0)) {
    throw InvalidConfigError("learning_rate must be positive");
  }
  if (schemes.size() != columns.size()) {
    throw LengthMismatchError("one column per scheme required");
  }
  const std::size_t n = labels.size();
  const std::size_t n_features = schemes.size();
  if (n == 0 || columns.empty() || columns.front().size() != n) {
    throw LengthMismatchError("labels and feature columns must align");
  }

  StumpEnsemble ensemble;
  ensemble.learning_rate = config.learning_rate;
  ensemble.monotone_direction = config.monotone_directions.empty()
                                    ? std::vector<int>(n_features, 0)
                                    : config.monotone_directions;
  if (ensemble.monotone_direction.size() != n_features) {
    throw LengthMismatchError("one monotone direction per feature required");
  }

  double base_rate = 0.0;
  for (int y : labels) base_rate += (y != 0);
  base_rate = std::clamp(base_rate / static_cast<double>(n), 1e-6, 1.0 - 1e-6);
  ensemble.base_score = std::log(base_rate / (1.0 - base_rate));

  // Bin index of every observation per feature; interval bins are a prefix,
  // so a cut at index c sends bins 0..c left and everything else (including
  // the missing bin) right.
  std::vector<std::vector<int>> bin_index(n_features);
  bool any_cut = false;
  for (std::size_t f = 0; f < n_features; ++f) {
    bin_index[f].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      bin_index[f][i] = assign_bin(schemes[f], columns[f][i]);
    }
    any_cut = any_cut || !schemes[f].cut_points.empty();
  }
  if (!any_cut) {
    ensemble.stopped_early = true;
    return ensemble;
  }

  std::vector<double> score(n, ensemble.base_score);
  for (int round = 0; round < config.rounds; ++round) {
    // Per-bin gradient/hessian aggregates for each feature.
    double best_improvement = 0.0;
    Stump best;
    bool found = false;
    std::vector<double> grad(n), hess(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = sigmoid(score[i]);
      grad[i] = (labels[i] != 0 ? 1.0 : 0.0) - p;
      hess[i] = std::max(p * (1.0 - p), 1e-12);
    }
    for (std::size_t f = 0; f < n_features; ++f) {
      const auto& cuts = schemes[f].cut_points;
      if (cuts.empty()) continue;
      const int n_bins = schemes[f].n_bins();
      std::vector<double> g(n_bins, 0.0), h(n_bins, 0.0), cnt(n_bins, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        const int b = bin_index[f][i];
        g[b] += grad[i];
        h[b] += hess[i];
        cnt[b] += 1.0;
      }
      double g_total = 0.0, h_total = 0.0, n_total = 0.0;
      for (int b = 0; b < n_bins; ++b) {
        g_total += g[b];
        h_total += h[b];
        n_total += cnt[b];
      }
      const int direction = ensemble.monotone_direction[f];
      double gl = 0.0, hl = 0.0, nl = 0.0;
      for (std::size_t c = 0; c < cuts.size(); ++c) {
        gl += g[c];
        hl += h[c];
        nl += cnt[c];
        const double gr = g_total - gl;
        const double hr = h_total - hl;
        const double nr = n_total - nl;
        if (nl == 0.0 || nr == 0.0) continue;
        double wl = gl / hl;
        double wr = gr / hr;
        if ((direction > 0 && wr < wl) || (direction < 0 && wr > wl)) {
          wl = wr = (gl + gr) / (hl + hr);
        }
        // Reduction in squared error against the negative gradients.
        const double improvement =
            2.0 * (wl * gl + wr * gr) - (wl * wl * nl + wr * wr * nr);
        if (improvement > best_improvement + 1e-12) {
          best_improvement = improvement;
          best = {static_cast<int>(f), cuts[c], wl, wr};
          found = true;
        }
      }
    }
    if (!found) {
      ensemble.stopped_early = true;
      break;
    }
    ensemble.stumps.push_back(best);
    const auto& col_bins = bin_index[static_cast<std::size_t>(best.feature)];
    const auto& cuts = schemes[static_cast<std::size_t>(best.feature)].cut_points;
    const int cut_bin = static_cast<int>(
        std::lower_bound(cuts.begin(), cuts.end(), best.threshold) -
        cuts.begin());
    for (std::size_t i = 0; i < n; ++i) {
      const bool left = col_bins[i] <= cut_bin;
      score[i] += config.learning_rate * (left ? best.left_value : best.right_value);
    }
  }
  return ensemble;
}

}  // namespace scorekit
