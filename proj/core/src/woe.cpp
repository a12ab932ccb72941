#include "scorekit/woe.hpp"

#include <cmath>
#include <numeric>

#include "scorekit/errors.hpp"
#include "scorekit/stats.hpp"

namespace scorekit {

WoeTable woe_table_from_counts(std::span<const double> left,
                               std::span<const double> right,
                               Conditioning conditioning) {
  if (left.size() != right.size()) {
    throw BinStructureMismatchError("count columns differ in length");
  }
  if (left.empty()) {
    throw BinStructureMismatchError("empty count table");
  }
  double total_left = std::accumulate(left.begin(), left.end(), 0.0);
  double total_right = std::accumulate(right.begin(), right.end(), 0.0);
  if (total_left <= 0.0 || total_right <= 0.0) {
    throw EmptyClassError("a conditioning class has no observations");
  }

  bool any_zero = false;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] == 0.0 || right[i] == 0.0) any_zero = true;
  }

  WoeTable table;
  table.conditioning = conditioning;
  table.smoothed = any_zero;
  const double add = any_zero ? 0.5 : 0.0;
  total_left += add * static_cast<double>(left.size());
  total_right += add * static_cast<double>(right.size());
  table.population_log_odds = std::log(total_left / total_right);
  table.bins.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    WoeBin b;
    b.bin = static_cast<int>(i);
    b.n_good = left[i] + add;
    b.n_bad = right[i] + add;
    b.p_g = b.n_good / total_left;
    b.p_b = b.n_bad / total_right;
    b.woe = std::log(b.p_g / b.p_b);
    b.var_woe = 1.0 / b.n_good + 1.0 / b.n_bad;
    table.bins.push_back(b);
  }
  return table;
}

WoeTable build_woe_table(const BinningScheme& scheme, Conditioning conditioning) {
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
  return woe_table_from_counts(left, right, conditioning);
}

IvEstimate information_value(const WoeTable& table, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidConfigError("alpha must lie strictly in (0,1)");
  }
  IvEstimate est;
  est.alpha = alpha;
  est.df = static_cast<int>(table.bins.size()) - 1;
  double iv = 0.0, var = 0.0;
  for (const auto& b : table.bins) {
    const double w = b.p_g - b.p_b;
    iv += w * b.woe;
    var += w * w * b.var_woe;
  }
  est.iv = iv;
  est.se = std::sqrt(var);
  est.z = est.se > 0.0 ? est.iv / est.se : 0.0;
  est.p_value = 1.0 - normal_cdf(est.z);
  est.p_null = (est.se > 0.0 && est.df >= 1)
                   ? chi_squared_sf(est.z * est.z, est.df)
                   : 0.5;
  const double half_width = normal_quantile(1.0 - alpha / 2.0) * est.se;
  est.ci_low = est.iv - half_width;
  est.ci_high = est.iv + half_width;
  return est;
}

IvEstimate psi_from_counts(std::span<const BinCounts> baseline,
                           std::span<const BinCounts> current,
                           double alpha) {
  if (baseline.size() != current.size()) {
    throw BinStructureMismatchError("epochs have different bin structures");
  }
  if (baseline.empty()) {
    throw BinStructureMismatchError("empty bin structure");
  }
  std::vector<double> left(baseline.size()), right(current.size());
  double lt = 0.0, rt = 0.0;
  for (std::size_t i = 0; i < baseline.size(); ++i) {
    left[i] = static_cast<double>(baseline[i].total());
    right[i] = static_cast<double>(current[i].total());
    lt += left[i];
    rt += right[i];
  }
  if (lt == 0.0 || rt == 0.0) {
    throw EmptyEpochError("an epoch has no observations");
  }
  return information_value(woe_table_from_counts(left, right), alpha);
}

IvStrength classify_strength(double iv) {
  if (iv < 0.0) throw NegativeIvError("IV cannot be negative");
  if (iv < 0.02) return IvStrength::weak;
  if (iv < 0.10) return IvStrength::medium;
  if (iv < 0.30) return IvStrength::strong;
  return IvStrength::suspicious;
}

const char* to_string(IvStrength s) {
  switch (s) {
    case IvStrength::weak: return "weak";
    case IvStrength::medium: return "medium";
    case IvStrength::strong: return "strong";
    case IvStrength::suspicious: return "suspicious";
  }
  return "unknown";
}

nlohmann::ordered_json woe_table_to_json(const WoeTable& table) {
  nlohmann::ordered_json j;
  j["conditioning"] =
      table.conditioning == Conditioning::outcome ? "outcome" : "group";
  j["population_log_odds"] = table.population_log_odds;
  j["smoothed"] = table.smoothed;
  auto bins = nlohmann::ordered_json::array();
  for (const auto& b : table.bins) {
    bins.push_back({{"bin", b.bin},
                    {"woe", b.woe},
                    {"var_woe", b.var_woe},
                    {"p_g", b.p_g},
                    {"p_b", b.p_b},
                    {"n_good", b.n_good},
                    {"n_bad", b.n_bad}});
  }
  j["bins"] = std::move(bins);
  return j;
}

nlohmann::ordered_json iv_estimate_to_json(const IvEstimate& est) {
  return nlohmann::ordered_json{
      {"iv", est.iv},       {"se", est.se},
      {"z", est.z},         {"p_value", est.p_value},
      {"p_null", est.p_null}, {"ci_low", est.ci_low},
      {"ci_high", est.ci_high}, {"alpha", est.alpha},
      {"df", est.df}};
}

}  // namespace scorekit
