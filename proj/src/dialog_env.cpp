#include "dualsys/dialog_env.hpp"

#include <algorithm>

#include "dualsys/metrics.hpp"

namespace dualsys {

double reward_for(bool success, int turns_used, int cap, RewardBase base) {
  if (turns_used < 1 || turns_used > cap)
    throw std::invalid_argument("turns_used out of [1, cap]");
  const double b = base == RewardBase::cap ? cap : turns_used;
  return success ? -turns_used + 2.0 * b : -turns_used - b;
}

DialogEnv::DialogEnv(const Ontology& ont, UserGoal goal, EpisodeConfig config)
    : ont_(&ont), goal_(std::move(goal)), config_(config),
      rng_(Rng::stream(config.seed, 0xE417ULL)) {
  if (config_.max_turns < 1) throw std::invalid_argument("max_turns must be >= 1");
  validate_goal(goal_, ont);
  state_ = initial_belief(goal_, ont);
}

DialogEnv::DialogEnv(const Ontology& ont, UserGoal goal, EpisodeConfig config,
                     const BeliefState& snapshot)
    : DialogEnv(ont, std::move(goal), config) {
  state_.table = snapshot.table;
  state_.booked_domains = snapshot.booked_domains;
  state_.turn = snapshot.turn;
}

const BeliefState& DialogEnv::reset() {
  state_ = initial_belief(goal_, ont_);
  rewards_.clear();
  done_ = false;
  success_ = false;
  return state_;
}

bool DialogEnv::task_complete() const {
  for (const auto& g : goal_.domains) {
    for (const auto& r : g.requested) {
      const SlotEntry* e = state_.find(g.domain, r);
      if (!e || e->status != SlotStatus::confirmed) return false;
    }
    if (g.wants_booking) {
      if (g.booking.empty()) {
        if (!state_.booked_domains.count(g.domain)) return false;
      } else {
        for (const auto& [b, v] : g.booking) {
          const SlotEntry* e = state_.find(g.domain, b);
          if (!e || e->status != SlotStatus::booked) return false;
        }
      }
    }
  }
  return true;
}

void DialogEnv::apply_system_act(const DialogAct& act, ActList& responses,
                                 bool& system_goodbye) {
  if (act.type == ActType::goodbye) {
    system_goodbye = true;
    return;
  }
  if (!ont_->has_slot(act.domain, act.slot) &&
      !(act.type == ActType::book && act.slot.empty() && ont_->find(act.domain)))
    throw ValidationError("system act does not resolve against the ontology: " + to_string(act));
  if (!state_.has_domain(act.domain)) return;  // domain not active in this dialog

  const DomainGoal* g = goal_.find(act.domain);
  const DomainDef& dom = ont_->at(act.domain);

  switch (act.type) {
    case ActType::request: {
      std::string slot = act.slot;
      if (config_.noise_p > 0.0 && rng_.next_bool(config_.noise_p) && g &&
          !g->constraints.empty()) {
        // user mishears and answers a different constraint
        auto it = g->constraints.begin();
        std::advance(it, static_cast<long>(rng_.next_below(g->constraints.size())));
        slot = it->first;
      }
      std::string value = "dont care";
      if (g) {
        if (auto it = g->constraints.find(slot); it != g->constraints.end()) value = it->second;
        else if (auto bt = g->booking.find(slot); bt != g->booking.end()) value = bt->second;
      }
      if (state_.find(act.domain, slot)) {
        auto& e = state_.entry(act.domain, slot);
        if (e.status == SlotStatus::empty || e.status == SlotStatus::mentioned)
          e = SlotEntry{value, SlotStatus::mentioned};
      }
      responses.push_back({ActType::inform, act.domain, slot, value});
      break;
    }
    case ActType::inform: {
      const bool non_null = !is_null_value(act.value);
      const bool requested_by_user =
          g && std::find(g->requested.begin(), g->requested.end(), act.slot) != g->requested.end();
      if (requested_by_user) {
        if (non_null) state_.entry(act.domain, act.slot) = {act.value, SlotStatus::confirmed};
        break;  // answer accepted silently (or ignored when null)
      }
      const std::string* target = nullptr;
      if (g) {
        if (auto it = g->constraints.find(act.slot); it != g->constraints.end()) target = &it->second;
        else if (auto bt = g->booking.find(act.slot); bt != g->booking.end()) target = &bt->second;
      }
      if (target) {
        if (act.value == *target) {
          state_.entry(act.domain, act.slot) = {*target, SlotStatus::confirmed};
          responses.push_back({ActType::confirm, act.domain, act.slot, *target});
        } else {
          // wrong inform: downgrade and re-issue the constraint
          state_.entry(act.domain, act.slot) = {*target, SlotStatus::mentioned};
          responses.push_back({ActType::inform, act.domain, act.slot, *target});
        }
      } else if (state_.find(act.domain, act.slot)) {
        auto& e = state_.entry(act.domain, act.slot);
        if (e.status == SlotStatus::empty && non_null)
          e = SlotEntry{act.value, SlotStatus::mentioned};
      }
      break;
    }
    case ActType::confirm: {
      const std::string* target = nullptr;
      if (g) {
        if (auto it = g->constraints.find(act.slot); it != g->constraints.end()) target = &it->second;
        else if (auto bt = g->booking.find(act.slot); bt != g->booking.end()) target = &bt->second;
      }
      if (target) {
        if (act.value == *target) {
          state_.entry(act.domain, act.slot) = {*target, SlotStatus::confirmed};
          responses.push_back({ActType::confirm, act.domain, act.slot, *target});
        } else {
          state_.entry(act.domain, act.slot) = {*target, SlotStatus::mentioned};
          responses.push_back({ActType::inform, act.domain, act.slot, *target});
        }
      } else if (const SlotEntry* e = state_.find(act.domain, act.slot);
                 e && !e->value.empty() && e->value == act.value) {
        state_.entry(act.domain, act.slot).status = SlotStatus::confirmed;
        responses.push_back({ActType::confirm, act.domain, act.slot, act.value});
      } else {
        responses.push_back({ActType::inform, act.domain, act.slot, "dont care"});
      }
      break;
    }
    case ActType::book: {
      if (!dom.bookable) break;
      if (dom.book_slots.empty()) {
        state_.booked_domains.insert(act.domain);
      } else if (g) {
        auto bt = g->booking.find(act.slot);
        if (bt != g->booking.end()) {
          if (act.value == bt->second) {
            state_.entry(act.domain, act.slot) = {bt->second, SlotStatus::booked};
          } else {
            state_.entry(act.domain, act.slot) = {bt->second, SlotStatus::mentioned};
            responses.push_back({ActType::inform, act.domain, act.slot, bt->second});
          }
        }
      }
      break;
    }
    default: break;
  }
}

void DialogEnv::user_agenda(ActList& responses) {
  // surface pending information requests once; their status then persists
  for (const auto& g : goal_.domains) {
    for (const auto& r : g.requested) {
      SlotEntry& e = state_.entry(g.domain, r);
      if (e.status == SlotStatus::empty) {
        e.status = SlotStatus::requested;
        responses.push_back({ActType::request, g.domain, r, ""});
      }
    }
  }
  if (responses.empty() && !task_complete()) {
    // keep the dialog moving: volunteer one unmentioned constraint
    for (const auto& g : goal_.domains) {
      for (const auto& [s, v] : g.constraints) {
        SlotEntry& e = state_.entry(g.domain, s);
        if (e.status == SlotStatus::empty) {
          e = SlotEntry{v, SlotStatus::mentioned};
          responses.push_back({ActType::inform, g.domain, s, v});
          return;
        }
      }
    }
  }
}

DialogEnv::StepOut DialogEnv::step(const ActList& system_acts) {
  if (done_) throw StateError("step() called on a finished episode");
  if (system_acts.empty()) throw std::invalid_argument("system_acts must be non-empty");

  bool system_goodbye = false;
  ActList responses;
  for (const auto& a : system_acts) apply_system_act(a, responses, system_goodbye);
  user_agenda(responses);

  state_.turn += 1;
  for (const auto& a : system_acts) state_.system_history.push_back(a);

  if (task_complete()) {
    done_ = true;
    success_ = true;
    responses.push_back({ActType::goodbye, "", "", ""});
  } else if (system_goodbye || state_.turn >= config_.max_turns) {
    done_ = true;
    success_ = false;
  }

  double reward = -1.0;
  if (done_) {
    const double b =
        config_.reward_base == RewardBase::cap ? config_.max_turns : state_.turn;
    reward += success_ ? 2.0 * b : -b;
  }
  rewards_.push_back(reward);
  for (const auto& a : responses) state_.user_history.push_back(a);
  return StepOut{std::move(responses), reward, done_};
}

EpisodeResult DialogEnv::result() const {
  EpisodeResult r;
  r.success = success_;
  r.turns_used = state_.turn;
  r.rewards = rewards_;
  r.cumulative_reward = 0.0;
  for (double x : rewards_) r.cumulative_reward += x;
  r.final_state = state_;
  r.system_acts = state_.system_history;
  return r;
}

}  // namespace dualsys
