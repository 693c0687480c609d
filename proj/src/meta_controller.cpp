#include "dualsys/meta_controller.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dualsys/errors.hpp"

namespace dualsys {

const char* to_string(ControllerMode m) {
  switch (m) {
    case ControllerMode::full: return "full";
    case ControllerMode::no_ec: return "no_ec";
    case ControllerMode::no_cc: return "no_cc";
    case ControllerMode::random_p: return "random_p";
    case ControllerMode::s1_only: return "s1_only";
  }
  return "?";
}

ControllerMode controller_mode_from(const std::string& s) {
  if (s == "full") return ControllerMode::full;
  if (s == "no_ec") return ControllerMode::no_ec;
  if (s == "no_cc") return ControllerMode::no_cc;
  if (s == "random_p") return ControllerMode::random_p;
  if (s == "s1_only") return ControllerMode::s1_only;
  throw ConfigError("unknown controller mode: " + s);
}

const char* to_string(TriggerReason r) {
  switch (r) {
    case TriggerReason::exploration_condition: return "exploration_condition";
    case TriggerReason::confidence_condition: return "confidence_condition";
    case TriggerReason::both: return "both";
    case TriggerReason::none: return "none";
    case TriggerReason::random: return "random";
    case TriggerReason::forced_off: return "forced_off";
  }
  return "?";
}

double exploration_bonus(std::uint64_t n, double total_steps) {
  if (n == 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(std::log(total_steps) / static_cast<double>(n));
}

TriggerDecision should_activate_s2(std::uint64_t n, std::uint64_t total_steps, double p_s1,
                                   const ControllerConfig& config, Rng& rng) {
  if (p_s1 < 0.0 || p_s1 > 1.0) throw std::invalid_argument("p_s1 out of [0,1]");
  if (total_steps < 1) throw std::invalid_argument("total_steps must be >= 1");

  TriggerDecision d;
  d.n = n;
  d.p_s1 = p_s1;
  const double t_eff = static_cast<double>(total_steps < 2 ? 2 : total_steps);
  d.threshold = config.tau * std::sqrt(std::log(t_eff));

  const bool ec = static_cast<double>(n) < d.threshold;
  const bool cc = p_s1 < config.kappa;

  switch (config.mode) {
    case ControllerMode::full:
      d.use_s2 = ec || cc;
      d.reason = ec && cc ? TriggerReason::both
                 : ec     ? TriggerReason::exploration_condition
                 : cc     ? TriggerReason::confidence_condition
                          : TriggerReason::none;
      break;
    case ControllerMode::no_ec:
      d.use_s2 = cc;
      d.reason = cc ? TriggerReason::confidence_condition : TriggerReason::none;
      break;
    case ControllerMode::no_cc:
      d.use_s2 = ec;
      d.reason = ec ? TriggerReason::exploration_condition : TriggerReason::none;
      break;
    case ControllerMode::random_p:
      d.use_s2 = rng.next_bool(config.random_p);
      d.reason = d.use_s2 ? TriggerReason::random : TriggerReason::none;
      break;
    case ControllerMode::s1_only:
      d.use_s2 = false;
      d.reason = TriggerReason::forced_off;
      break;
  }
  return d;
}

}  // namespace dualsys
