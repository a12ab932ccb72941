#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "scorekit/stats.hpp"

namespace scorekit {

// Seedable, portable random source. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard; every sampler below is
// implemented here rather than delegating to std:: distributions (whose
// algorithms are implementation-defined), so a given seed reproduces the
// same stream on any conforming platform.
//
// Samplers:
//   uniform():       53-bit mantissa uniform in [0,1)
//   normal():        inverse-CDF transform (AS 241) of a uniform
//   gamma(shape):    Marsaglia-Tsang squeeze; shape<1 boosted via U^(1/a)
//   beta(a,b):       ratio of two gammas
//   poisson(mean):   Knuth product-of-uniforms (mean <= 60 here)
//   uniform_int(n):  unbiased via rejection
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0,1): offsets by half an ulp so the inverse CDF never sees 0.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_quantile(uniform_open()); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  double lognormal(double mu, double sigma) {
    return std::exp(normal(mu, sigma));
  }

  bool bernoulli(double p) { return uniform() < p; }

  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = uniform_open();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

  int poisson(double mean) {
    const double limit = std::exp(-mean);
    int k = 0;
    double prod = uniform_open();
    while (prod > limit) {
      ++k;
      prod *= uniform_open();
    }
    return k;
  }

  // Uniform integer in [0, n). Rejection keeps the draw unbiased.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  // In-place Fisher-Yates; std::shuffle is not portable across libraries.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace scorekit
