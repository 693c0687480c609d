#pragma once

#include <cstdint>
#include <string>

#include "dualsys/rng.hpp"

namespace dualsys {

enum class ControllerMode { full, no_ec, no_cc, random_p, s1_only };

const char* to_string(ControllerMode m);
ControllerMode controller_mode_from(const std::string& s);

// Switching-rule parameters. Defaults are the tuned operating point.
struct ControllerConfig {
  double tau = 1.0;       // exploration threshold scale
  double kappa = 0.7;     // confidence threshold
  int bins = 5;           // per-dimension discretization
  ControllerMode mode = ControllerMode::full;
  double random_p = 0.10;  // invocation chance in random_p mode
};

enum class TriggerReason {
  exploration_condition,
  confidence_condition,
  both,
  none,
  random,
  forced_off,
};

const char* to_string(TriggerReason r);

// Full provenance of one switching decision.
struct TriggerDecision {
  bool use_s2 = false;
  TriggerReason reason = TriggerReason::none;
  std::uint64_t n = 0;       // visitation count used
  double threshold = 0.0;    // tau * sqrt(log T)
  double p_s1 = 0.0;
};

// Count-based optimism bonus sqrt(log T / n), natural log. An unvisited cell
// (n = 0) is maximally attractive: +infinity.
double exploration_bonus(std::uint64_t n, double total_steps);

// The dual-trigger rule: deliberate when the cell is under-visited
// (n < tau * sqrt(log T)) or the fast policy is unsure (p_s1 < kappa), both
// strict. Ablation modes drop one condition, replace the rule with a coin
// flip, or force System 1. T is clamped to >= 2 so the earliest turns keep a
// positive threshold.
TriggerDecision should_activate_s2(std::uint64_t n, std::uint64_t total_steps, double p_s1,
                                   const ControllerConfig& config, Rng& rng);

}  // namespace dualsys
