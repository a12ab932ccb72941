#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace scorekit {

struct GeneratorConfig {
  std::int64_t n_rows = 20000;
  std::uint64_t seed = 42;
  double group_share = 0.30;
  double base_default_rate = 0.15;
  // How strongly feature marginals shift with group membership, in [0, 1).
  double group_feature_correlation = 0.5;

  void validate() const;
};

// Columnar credit sample: seven features, a protected-group flag and a
// default flag. true_* fields carry the generator's ground truth (the
// realized linear risk index and its coefficients) for oracle tests; they
// are empty on datasets loaded from CSV and are never serialized.
struct CreditDataset {
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> features;  // column-major, one vector per feature
  std::vector<int> protected_group;
  std::vector<int> defaulted;
  std::uint64_t seed = 0;

  std::vector<double> true_index;         // intercept + linear index per row
  std::vector<double> true_coefficients;  // on the standardized transforms
  double true_intercept = 0.0;

  std::size_t n() const { return defaulted.size(); }
};

// Deterministic from the seed (portable RNG, see rng.hpp): continuous
// amounts are log-normal, utilization is beta, flags Bernoulli, trade count
// Poisson; group membership shifts a subset of the marginals in proportion
// to group_feature_correlation. Default outcomes follow a logistic model on
// standardized transforms whose intercept is calibrated on the realized
// sample so the default rate lands on base_default_rate.
CreditDataset generate(const GeneratorConfig& config);

// Header `mortgage,balance,past_due,utilization,delinq_flag,inquiry_flag,
// trade_count,protected,default`, UTF-8, LF endings, reals at 17 significant
// digits. Round-trips counts and flags exactly.
void write_csv(const CreditDataset& data, const std::string& path);

// Every column other than the target and protected ones is a feature.
// Malformed cells raise ParseError with the row and column.
CreditDataset load_csv(const std::string& path,
                       const std::string& target_col = "default",
                       const std::string& protected_col = "protected");

// Stratified on the default label, deterministic from the seed; the two
// parts are disjoint and exhaustive and preserve row order.
std::pair<CreditDataset, CreditDataset> split(const CreditDataset& data,
                                              double train_fraction,
                                              std::uint64_t seed);

}  // namespace scorekit
