#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace scorekit {

// Normalized probability vector over a shared set of bins. Immutable after
// construction; the substrate every divergence here operates on.
//
// All divergences use natural logarithms (nats).
class DiscreteDistribution {
 public:
  // Accepts a vector whose entries are >= 0 and sum to 1 within
  // kNormalizationTolerance; renormalizes the small residual away.
  explicit DiscreteDistribution(std::vector<double> mass);

  // Normalizes arbitrary non-negative weights (e.g. bin counts) that need
  // not sum to one. Sum must be positive.
  static DiscreteDistribution from_counts(std::span<const double> counts);

  std::size_t size() const { return mass_.size(); }
  double operator[](std::size_t i) const { return mass_[i]; }
  const std::vector<double>& mass() const { return mass_; }

  static constexpr double kNormalizationTolerance = 1e-9;

 private:
  struct Unchecked {};
  DiscreteDistribution(std::vector<double> mass, Unchecked) : mass_(std::move(mass)) {}
  std::vector<double> mass_;
};

// KL(p||q) = sum p_i ln(p_i/q_i), with 0*ln(0/q) = 0. Requires q_i > 0
// wherever p_i > 0; throws AbsoluteContinuityError otherwise.
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

// Jeffreys divergence sum (p_i-q_i) ln(p_i/q_i); the population stability
// index. Undefined when either side carries zero mass on a supported bin
// (throws ZeroBinMassError); count-based callers smooth first.
double psi(const DiscreteDistribution& p, const DiscreteDistribution& q);

// Jensen-Shannon divergence 0.5 KL(p||m) + 0.5 KL(q||m), m = (p+q)/2.
// Always finite, bounded by ln 2; sqrt(js) is a metric.
double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

}  // namespace scorekit
