#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "scorekit/binning.hpp"

namespace scorekit {

// One bin of a WoE table. Counts are doubles because the Haldane-Anscombe
// 0.5 correction yields half-integer cells; p_g/p_b are the class-conditional
// bin probabilities computed from the (possibly smoothed) counts.
struct WoeBin {
  int bin = 0;
  double woe = 0.0;      // ln(p_g / p_b), nats
  double var_woe = 0.0;  // 1/n_good + 1/n_bad, nats^2
  double p_g = 0.0;
  double p_b = 0.0;
  double n_good = 0.0;
  double n_bad = 0.0;
};

struct WoeTable {
  std::vector<WoeBin> bins;
  double population_log_odds = 0.0;  // ln(total good / total bad), smoothed
  bool smoothed = false;             // any raw cell was zero
  Conditioning conditioning = Conditioning::outcome;
};

// IV (or PSI) point estimate with delta-method inference.
//
// p_value is the one-sided normal tail 1 - Phi(z) for H0: IV = 0. Because
// both IV and its plug-in SE collapse at the null, z^2 is asymptotically
// chi-squared with (bins - 1) degrees of freedom rather than z being
// standard normal; p_null carries that calibrated tail and is what the
// drift verdicts use. Both are reported.
struct IvEstimate {
  double iv = 0.0;
  double se = 0.0;
  double z = 0.0;
  double p_value = 0.5;
  double p_null = 0.5;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double alpha = 0.05;
  int df = 0;  // bins - 1
};

enum class IvStrength { weak, medium, strong, suspicious };

// Builds the WoE table for one conditioning of a fitted scheme. If any cell
// of the two-column count table is zero, 0.5 is added to every cell and the
// smoothed flag is set.
WoeTable build_woe_table(const BinningScheme& scheme, Conditioning conditioning);

// Same construction from raw two-column counts (left plays "good", right
// plays "bad"); the building block psi_from_counts shares.
WoeTable woe_table_from_counts(std::span<const double> left,
                               std::span<const double> right,
                               Conditioning conditioning = Conditioning::outcome);

// IV = sum (p_g - p_b) * WoE with SE(IV) = sqrt(sum (p_g - p_b)^2 Var(WoE)),
// one-sided test against H0: IV = 0, and a two-sided CI at level 1 - alpha.
IvEstimate information_value(const WoeTable& table, double alpha = 0.05);

// PSI between two epochs sharing one bin structure, with the identical
// inference treatment: per-bin totals of the epochs play the two classes.
IvEstimate psi_from_counts(std::span<const BinCounts> baseline,
                           std::span<const BinCounts> current,
                           double alpha = 0.05);

// Conventional strength ladder: < 0.02 weak, < 0.10 medium, < 0.30 strong,
// else suspicious (IV that high usually signals over-granular bins).
// Boundary values take the higher category. Thresholds assume nats.
IvStrength classify_strength(double iv);

const char* to_string(IvStrength s);

nlohmann::ordered_json woe_table_to_json(const WoeTable& table);
nlohmann::ordered_json iv_estimate_to_json(const IvEstimate& est);

}  // namespace scorekit
