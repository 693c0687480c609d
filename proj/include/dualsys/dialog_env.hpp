#pragma once

#include <cstdint>
#include <vector>

#include "dualsys/belief.hpp"
#include "dualsys/dialog_act.hpp"
#include "dualsys/ontology.hpp"
#include "dualsys/rng.hpp"

namespace dualsys {

// How the terminal bonus interprets "t": the turn cap (TC-Bot lineage,
// default) or the elapsed turn count.
enum class RewardBase { cap, elapsed };

struct EpisodeConfig {
  int max_turns = 30;   // 30 single-domain, 40 multi-domain
  double discount = 0.99;
  std::uint64_t seed = 0;
  double noise_p = 0.0;  // chance the user answers a different slot than asked
  RewardBase reward_base = RewardBase::cap;
};

// Closed-form episode return: -1 per elapsed turn plus a terminal bonus of
// +2B on success / -B on failure, B per RewardBase.
double reward_for(bool success, int turns_used, int cap, RewardBase base = RewardBase::cap);

struct EpisodeResult {
  bool success = false;
  int turns_used = 0;
  double cumulative_reward = 0.0;
  std::vector<double> rewards;  // one entry per turn
  BeliefState final_state;
  ActList system_acts;
};

// Task-oriented dialog MDP with a deterministic agenda user. The user's
// behaviour is a pure function of (goal, belief), so episodes can be resumed
// from any belief snapshot.
class DialogEnv {
 public:
  DialogEnv(const Ontology& ont, UserGoal goal, EpisodeConfig config);

  // Resume from a mid-episode snapshot (empirical-regret rollouts).
  DialogEnv(const Ontology& ont, UserGoal goal, EpisodeConfig config, const BeliefState& snapshot);

  const BeliefState& reset();

  struct StepOut {
    ActList user_acts;
    double reward = 0.0;
    bool done = false;
  };
  // One exchange: apply the system acts, produce the user response, advance
  // the turn clock. Throws StateError after done.
  StepOut step(const ActList& system_acts);

  const BeliefState& state() const { return state_; }
  bool done() const { return done_; }
  bool task_complete() const;
  EpisodeResult result() const;
  const UserGoal& goal() const { return goal_; }
  const EpisodeConfig& config() const { return config_; }

 private:
  void apply_system_act(const DialogAct& act, ActList& responses, bool& system_goodbye);
  void user_agenda(ActList& responses);

  const Ontology* ont_;
  UserGoal goal_;
  EpisodeConfig config_;
  Rng rng_;
  BeliefState state_;
  std::vector<double> rewards_;
  bool done_ = false;
  bool success_ = false;
};

}  // namespace dualsys
