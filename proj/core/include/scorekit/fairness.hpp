#pragma once

#include <string>

#include <json.hpp>

#include "scorekit/woe.hpp"

namespace scorekit {

// Performance and fairness IV for one feature over the same bins, plus the
// confidence-adjusted trade-off quantities. Ratios can be +infinity when the
// fairness denominator is exactly zero; JSON serializes that as "inf".
struct DualIvReport {
  std::string feature_id;
  IvEstimate iv_perf;
  IvEstimate iv_fair;
  double trade_ratio = 0.0;
  double conservative_ratio = 0.0;
  double k = 0.0;
  double violation_probability = 0.0;
  double epsilon = 0.0;
  bool passes_at_alpha = false;  // iv_fair + z_alpha * se_fair <= epsilon
};

// P(IV_fair > epsilon) under the asymptotic normal model. With se == 0 the
// model degenerates and a hard 0/1 indicator is returned instead.
double violation_probability(const IvEstimate& iv_fair, double epsilon);

// (IV_perf - k SE_perf) / (IV_fair + k SE_fair), numerator floored at zero.
// Throws NonpositiveDenominatorError when the denominator is not positive.
double conservative_ratio(const IvEstimate& iv_perf, const IvEstimate& iv_fair,
                          double k);

// Computes both conditionings of one scheme and fills the trade-off fields.
// k = 1.96 and k = 2.58 are the usual confidence multipliers.
DualIvReport dual_iv(const BinningScheme& scheme, double epsilon, double k,
                     double alpha = 0.05);

nlohmann::ordered_json dual_iv_to_json(const DualIvReport& report);

}  // namespace scorekit
