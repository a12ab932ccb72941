#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scorekit/divergence.hpp"

namespace scorekit {

// Which pair of conditional distributions to project from a scheme's counts:
// outcome -> (good, bad), group -> (group 0, group 1).
enum class Conditioning { outcome, group };

struct BinCounts {
  std::int64_t n_good = 0;
  std::int64_t n_bad = 0;
  std::int64_t n_group0 = 0;
  std::int64_t n_group1 = 0;

  std::int64_t total() const { return n_good + n_bad; }
};

enum class Impurity { gini, entropy };

struct BinningConfig {
  int max_splits = 4;
  double min_bin_fraction = 0.05;  // in (0, 0.5]
  Impurity impurity = Impurity::gini;

  void validate() const;
};

// Ordered cut points plus per-bin counts for one feature. Interval bins are
// right-closed: (-inf, c1], (c1, c2], ..., (ck, +inf). When the fitting data
// contains missing (NaN) readings, one extra "missing" bin is appended after
// the last interval; it takes part in WoE/IV like any other bin but is
// exempt from the minimum-size constraint.
struct BinningScheme {
  std::string feature_id;
  std::vector<double> cut_points;  // strictly increasing
  std::vector<BinCounts> bins;     // interval bins, then the missing bin if any
  BinningConfig config;
  bool missing_bin = false;
  bool degenerate = false;  // all finite readings identical; single interval bin

  int n_interval_bins() const { return static_cast<int>(cut_points.size()) + 1; }
  int n_bins() const { return static_cast<int>(bins.size()); }
  int missing_bin_index() const { return n_interval_bins(); }
};

// Greedy recursive depth-1 splitting on one feature: repeatedly take the
// single split (over midpoints of consecutive distinct sorted values) with
// the largest impurity reduction, subject to both children holding at least
// min_bin_fraction of the sample, until max_splits splits are placed or no
// admissible split improves impurity. Ties break toward the lowest
// threshold, so the result is deterministic.
//
// labels: 0 = good, 1 = bad (default); groups: 0 = reference, 1 = protected.
BinningScheme fit_stump_binning(std::span<const double> values,
                                std::span<const int> labels,
                                std::span<const int> groups,
                                const BinningConfig& config,
                                std::string feature_id = "");

// Total on reals: boundary values go to the left bin; NaN goes to the
// missing bin when the scheme has one and throws NonFiniteValueError
// otherwise.
int assign_bin(const BinningScheme& scheme, double value);

// Class- or group-conditional bin distributions. Applies the 0.5 smoothing
// rule to every cell when any single cell is zero, so the pair always has
// joint support.
std::pair<DiscreteDistribution, DiscreteDistribution> bin_distributions(
    const BinningScheme& scheme, Conditioning conditioning);

nlohmann::ordered_json scheme_to_json(const BinningScheme& scheme);
BinningScheme scheme_from_json(const nlohmann::json& j);

}  // namespace scorekit
