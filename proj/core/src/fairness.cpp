#include "scorekit/fairness.hpp"

#include <cmath>
#include <limits>

#include "scorekit/errors.hpp"
#include "scorekit/stats.hpp"

namespace scorekit {

namespace {

nlohmann::ordered_json real_or_inf(double x) {
  if (std::isinf(x)) return nlohmann::ordered_json("inf");
  return nlohmann::ordered_json(x);
}

}  // namespace

double violation_probability(const IvEstimate& iv_fair, double epsilon) {
  if (iv_fair.se == 0.0) {
    return iv_fair.iv > epsilon ? 1.0 : 0.0;
  }
  return normal_cdf((iv_fair.iv - epsilon) / iv_fair.se);
}

double conservative_ratio(const IvEstimate& iv_perf, const IvEstimate& iv_fair,
                          double k) {
  const double denominator = iv_fair.iv + k * iv_fair.se;
  if (!(denominator > 0.0)) {
    throw NonpositiveDenominatorError(
        "IV_fair + k * SE_fair must be positive");
  }
  const double numerator = std::max(0.0, iv_perf.iv - k * iv_perf.se);
  return numerator / denominator;
}

DualIvReport dual_iv(const BinningScheme& scheme, double epsilon, double k,
                     double alpha) {
  if (k < 0.0) throw InvalidConfigError("k must be non-negative");
  DualIvReport report;
  report.feature_id = scheme.feature_id;
  report.epsilon = epsilon;
  report.k = k;
  report.iv_perf = information_value(build_woe_table(scheme, Conditioning::outcome), alpha);
  report.iv_fair = information_value(build_woe_table(scheme, Conditioning::group), alpha);

  constexpr double inf = std::numeric_limits<double>::infinity();
  report.trade_ratio = report.iv_fair.iv > 0.0
                           ? report.iv_perf.iv / report.iv_fair.iv
                           : inf;
  const double denom = report.iv_fair.iv + k * report.iv_fair.se;
  report.conservative_ratio =
      denom > 0.0 ? conservative_ratio(report.iv_perf, report.iv_fair, k) : inf;
  report.violation_probability = violation_probability(report.iv_fair, epsilon);
  report.passes_at_alpha =
      report.iv_fair.iv + normal_quantile(1.0 - alpha) * report.iv_fair.se <=
      epsilon;
  return report;
}

nlohmann::ordered_json dual_iv_to_json(const DualIvReport& report) {
  nlohmann::ordered_json j;
  j["feature_id"] = report.feature_id;
  j["iv_perf"] = iv_estimate_to_json(report.iv_perf);
  j["iv_fair"] = iv_estimate_to_json(report.iv_fair);
  j["trade_ratio"] = real_or_inf(report.trade_ratio);
  j["conservative_ratio"] = real_or_inf(report.conservative_ratio);
  j["k"] = report.k;
  j["violation_probability"] = report.violation_probability;
  j["epsilon"] = report.epsilon;
  j["passes_at_alpha"] = report.passes_at_alpha;
  return j;
}

}  // namespace scorekit
