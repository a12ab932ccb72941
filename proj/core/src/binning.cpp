#include "scorekit/binning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "scorekit/errors.hpp"

namespace scorekit {

namespace {

// Impurity of a bin scaled by its size (n * impurity), so reductions are
// comparable across parents without a global normalizer.
double weighted_impurity(double n_good, double n_bad, Impurity kind) {
  const double n = n_good + n_bad;
  if (n <= 0.0) return 0.0;
  if (kind == Impurity::gini) {
    return 2.0 * n_good * n_bad / n;
  }
  double h = 0.0;
  if (n_good > 0.0) h += n_good * std::log(n / n_good);
  if (n_bad > 0.0) h += n_bad * std::log(n / n_bad);
  return h;
}

struct SortedSample {
  std::vector<double> value;
  std::vector<int> label;
  std::vector<int> group;
};

struct Segment {
  std::size_t lo = 0, hi = 0;  // half-open range into the sorted sample
};

struct SplitCandidate {
  bool valid = false;
  std::size_t pos = 0;  // split after sorted index pos-1 (left gets [lo,pos))
  double threshold = 0.0;
  double gain = 0.0;
};

SplitCandidate best_split(const SortedSample& s, const Segment& seg,
                          std::size_t min_count, Impurity kind) {
  SplitCandidate best;
  std::int64_t total_good = 0, total_bad = 0;
  for (std::size_t i = seg.lo; i < seg.hi; ++i) {
    (s.label[i] == 0 ? total_good : total_bad)++;
  }
  const double parent = weighted_impurity(static_cast<double>(total_good),
                                          static_cast<double>(total_bad), kind);
  std::int64_t left_good = 0, left_bad = 0;
  for (std::size_t i = seg.lo; i + 1 < seg.hi; ++i) {
    (s.label[i] == 0 ? left_good : left_bad)++;
    if (s.value[i] == s.value[i + 1]) continue;
    const std::size_t n_left = i + 1 - seg.lo;
    const std::size_t n_right = seg.hi - (i + 1);
    if (n_left < min_count || n_right < min_count) continue;
    const double child_sum =
        weighted_impurity(static_cast<double>(left_good),
                          static_cast<double>(left_bad), kind) +
        weighted_impurity(static_cast<double>(total_good - left_good),
                          static_cast<double>(total_bad - left_bad), kind);
    const double gain = parent - child_sum;
    const double threshold = 0.5 * (s.value[i] + s.value[i + 1]);
    if (gain > 1e-12 &&
        (!best.valid || gain > best.gain ||
         (gain == best.gain && threshold < best.threshold))) {
      best = {true, i + 1, threshold, gain};
    }
  }
  return best;
}

}  // namespace

void BinningConfig::validate() const {
  if (max_splits < 1) {
    throw InvalidConfigError("max_splits must be positive");
  }
  if (!(min_bin_fraction > 0.0 && min_bin_fraction <= 0.5)) {
    throw InvalidConfigError("min_bin_fraction must lie in (0, 0.5]");
  }
  if (min_bin_fraction * (max_splits + 1) > 1.0 + 1e-12) {
    throw InvalidConfigError(
        "min_bin_fraction * (max_splits + 1) must not exceed 1");
  }
}

BinningScheme fit_stump_binning(std::span<const double> values,
                                std::span<const int> labels,
                                std::span<const int> groups,
                                const BinningConfig& config,
                                std::string feature_id) {
  config.validate();
  const std::size_t n = values.size();
  if (n < 2 || labels.size() != n || groups.size() != n) {
    throw LengthMismatchError(
        "values, labels and groups must share a length of at least 2");
  }
  std::int64_t n_good = 0, n_bad = 0;
  for (int y : labels) (y == 0 ? n_good : n_bad)++;
  if (n_good == 0 || n_bad == 0) {
    throw SingleClassLabelsError("need at least one good and one bad label");
  }

  SortedSample s;
  std::vector<std::size_t> missing;
  std::vector<std::size_t> finite_idx;
  finite_idx.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    (std::isnan(values[i]) ? missing : finite_idx).push_back(i);
  }
  std::stable_sort(finite_idx.begin(), finite_idx.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });
  s.value.resize(finite_idx.size());
  s.label.resize(finite_idx.size());
  s.group.resize(finite_idx.size());
  for (std::size_t r = 0; r < finite_idx.size(); ++r) {
    const std::size_t src = finite_idx[r];
    s.value[r] = values[src];
    s.label[r] = labels[src];
    s.group[r] = groups[src];
  }

  BinningScheme scheme;
  scheme.feature_id = std::move(feature_id);
  scheme.config = config;
  scheme.missing_bin = !missing.empty();

  const std::size_t n_finite = s.value.size();
  const bool all_equal =
      n_finite == 0 || s.value.front() == s.value.back();
  scheme.degenerate = all_equal;

  std::vector<Segment> segments;
  if (!all_equal) {
    const std::size_t min_count = static_cast<std::size_t>(
        std::ceil(config.min_bin_fraction * static_cast<double>(n)));
    segments.push_back({0, n_finite});
    std::vector<SplitCandidate> cand{
        best_split(s, segments[0], min_count, config.impurity)};
    int splits = 0;
    while (splits < config.max_splits) {
      int pick = -1;
      for (std::size_t i = 0; i < segments.size(); ++i) {
        if (!cand[i].valid) continue;
        if (pick < 0 || cand[i].gain > cand[pick].gain ||
            (cand[i].gain == cand[pick].gain &&
             cand[i].threshold < cand[pick].threshold)) {
          pick = static_cast<int>(i);
        }
      }
      if (pick < 0) break;
      const Segment parent = segments[pick];
      const SplitCandidate chosen = cand[pick];
      scheme.cut_points.push_back(chosen.threshold);
      const Segment left{parent.lo, chosen.pos};
      const Segment right{chosen.pos, parent.hi};
      segments[pick] = left;
      cand[pick] = best_split(s, left, min_count, config.impurity);
      segments.push_back(right);
      cand.push_back(best_split(s, right, min_count, config.impurity));
      ++splits;
    }
    std::sort(scheme.cut_points.begin(), scheme.cut_points.end());
  }

  scheme.bins.assign(static_cast<std::size_t>(scheme.n_interval_bins()) +
                         (scheme.missing_bin ? 1 : 0),
                     BinCounts{});
  for (std::size_t i = 0; i < n_finite; ++i) {
    const auto it = std::lower_bound(scheme.cut_points.begin(),
                                     scheme.cut_points.end(), s.value[i]);
    auto& bin = scheme.bins[static_cast<std::size_t>(
        std::distance(scheme.cut_points.begin(), it))];
    (s.label[i] == 0 ? bin.n_good : bin.n_bad)++;
    (s.group[i] == 0 ? bin.n_group0 : bin.n_group1)++;
  }
  for (std::size_t idx : missing) {
    auto& bin = scheme.bins.back();
    (labels[idx] == 0 ? bin.n_good : bin.n_bad)++;
    (groups[idx] == 0 ? bin.n_group0 : bin.n_group1)++;
  }
  return scheme;
}

int assign_bin(const BinningScheme& scheme, double value) {
  if (std::isnan(value)) {
    if (scheme.missing_bin) return scheme.missing_bin_index();
    throw NonFiniteValueError("NaN reading on a scheme without a missing bin");
  }
  const auto it = std::lower_bound(scheme.cut_points.begin(),
                                   scheme.cut_points.end(), value);
  return static_cast<int>(std::distance(scheme.cut_points.begin(), it));
}

std::pair<DiscreteDistribution, DiscreteDistribution> bin_distributions(
    const BinningScheme& scheme, Conditioning conditioning) {
  std::vector<double> left(scheme.bins.size()), right(scheme.bins.size());
  for (std::size_t i = 0; i < scheme.bins.size(); ++i) {
    if (conditioning == Conditioning::outcome) {
      left[i] = static_cast<double>(scheme.bins[i].n_good);
      right[i] = static_cast<double>(scheme.bins[i].n_bad);
    } else {
      left[i] = static_cast<double>(scheme.bins[i].n_group0);
      right[i] = static_cast<double>(scheme.bins[i].n_group1);
    }
  }
  const double left_total = std::accumulate(left.begin(), left.end(), 0.0);
  const double right_total = std::accumulate(right.begin(), right.end(), 0.0);
  if (left_total == 0.0 || right_total == 0.0) {
    throw EmptyClassError("conditioning class absent from every bin");
  }
  bool any_zero = false;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] == 0.0 || right[i] == 0.0) any_zero = true;
  }
  if (any_zero) {
    for (double& c : left) c += 0.5;
    for (double& c : right) c += 0.5;
  }
  return {DiscreteDistribution::from_counts(left),
          DiscreteDistribution::from_counts(right)};
}

nlohmann::ordered_json scheme_to_json(const BinningScheme& scheme) {
  nlohmann::ordered_json j;
  j["feature_id"] = scheme.feature_id;
  j["cut_points"] = scheme.cut_points;
  auto bins = nlohmann::ordered_json::array();
  for (const auto& b : scheme.bins) {
    bins.push_back({{"n_good", b.n_good},
                    {"n_bad", b.n_bad},
                    {"n_group0", b.n_group0},
                    {"n_group1", b.n_group1}});
  }
  j["bins"] = std::move(bins);
  j["config"] = {{"max_splits", scheme.config.max_splits},
                 {"min_bin_fraction", scheme.config.min_bin_fraction},
                 {"impurity", scheme.config.impurity == Impurity::gini
                                  ? "gini"
                                  : "entropy"}};
  j["missing_bin"] = scheme.missing_bin;
  j["degenerate"] = scheme.degenerate;
  return j;
}

BinningScheme scheme_from_json(const nlohmann::json& j) {
  BinningScheme scheme;
  scheme.feature_id = j.at("feature_id").get<std::string>();
  scheme.cut_points = j.at("cut_points").get<std::vector<double>>();
  for (const auto& b : j.at("bins")) {
    BinCounts c;
    c.n_good = b.at("n_good").get<std::int64_t>();
    c.n_bad = b.at("n_bad").get<std::int64_t>();
    c.n_group0 = b.at("n_group0").get<std::int64_t>();
    c.n_group1 = b.at("n_group1").get<std::int64_t>();
    scheme.bins.push_back(c);
  }
  const auto& cfg = j.at("config");
  scheme.config.max_splits = cfg.at("max_splits").get<int>();
  scheme.config.min_bin_fraction = cfg.at("min_bin_fraction").get<double>();
  scheme.config.impurity = cfg.at("impurity").get<std::string>() == "entropy"
                               ? Impurity::entropy
                               : Impurity::gini;
  scheme.missing_bin = j.at("missing_bin").get<bool>();
  scheme.degenerate = j.value("degenerate", false);
  return scheme;
}

}  // namespace scorekit
