#include "scorekit/divergence.hpp"

#include <cmath>
#include <string>

#include "scorekit/errors.hpp"

namespace scorekit {

namespace {

void require_same_length(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.size() != q.size()) {
    throw LengthMismatchError("distributions have " + std::to_string(p.size()) +
                              " and " + std::to_string(q.size()) + " bins");
  }
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> mass) : mass_(std::move(mass)) {
  if (mass_.empty()) {
    throw NormalizationError("distribution needs at least one bin");
  }
  double sum = 0.0;
  for (double m : mass_) {
    if (!(m >= 0.0)) {  // also rejects NaN
      throw NormalizationError("negative or non-finite probability mass");
    }
    sum += m;
  }
  if (std::fabs(sum - 1.0) > kNormalizationTolerance) {
    throw NormalizationError("mass sums to " + std::to_string(sum) +
                             ", outside tolerance " +
                             std::to_string(kNormalizationTolerance));
  }
  for (double& m : mass_) m /= sum;
}

DiscreteDistribution DiscreteDistribution::from_counts(std::span<const double> counts) {
  if (counts.empty()) {
    throw NormalizationError("distribution needs at least one bin");
  }
  double sum = 0.0;
  for (double c : counts) {
    if (!(c >= 0.0)) {
      throw NormalizationError("negative or non-finite count");
    }
    sum += c;
  }
  if (!(sum > 0.0)) {
    throw NormalizationError("counts sum to zero");
  }
  std::vector<double> mass(counts.begin(), counts.end());
  for (double& m : mass) m /= sum;
  return DiscreteDistribution(std::move(mass), Unchecked{});
}

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      throw AbsoluteContinuityError("p has mass on bin " + std::to_string(i) +
                                    " where q is zero");
    }
    sum += p[i] * std::log(p[i] / q[i]);
  }
  return sum;
}

double psi(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0 && q[i] == 0.0) continue;
    if (p[i] == 0.0 || q[i] == 0.0) {
      throw ZeroBinMassError("one-sided zero mass on bin " + std::to_string(i) +
                             "; smooth counts before computing PSI");
    }
    sum += (p[i] - q[i]) * std::log(p[i] / q[i]);
  }
  return sum;
}

double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0.0) sum += 0.5 * p[i] * std::log(p[i] / m);
    if (q[i] > 0.0) sum += 0.5 * q[i] * std::log(q[i] / m);
  }
  return sum;
}

}  // namespace scorekit
