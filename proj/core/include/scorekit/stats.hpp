#pragma once

namespace scorekit {

// Standard normal CDF, computed through erfc. Accurate to a few ulp over the
// full double range.
double normal_cdf(double x);

// Inverse standard normal CDF (Wichura's AS 241, PPND16 constants).
// Absolute error below 1e-15 for p in (0,1); p outside (0,1) is an error.
double normal_quantile(double p);

// Survival function of the chi-squared distribution with df degrees of
// freedom: P(X > x). df >= 1, x >= 0.
double chi_squared_sf(double x, int df);

}  // namespace scorekit
