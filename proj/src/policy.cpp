#include "dualsys/policy.hpp"

#include <algorithm>
#include <cmath>

namespace dualsys {

PolicyAction PolicyBackend::infer(const BeliefState&, const std::vector<CandidateAction>&) {
  throw BackendError(id() + " does not support System 1 inference");
}

std::vector<ReasoningPath> PolicyBackend::deliberate(const BeliefState&,
                                                     const std::vector<CandidateAction>&,
                                                     const CognitiveState&, TriggerReason) {
  throw BackendError(id() + " does not support System 2 deliberation");
}

bool PolicyBackend::distill_pass(const std::deque<DistillRecord>&, const Ontology&) {
  return false;
}

static bool act_resolves(const DialogAct& act, const Ontology& ont) {
  if (act.type == ActType::goodbye) return true;
  if (act.type == ActType::book && act.slot.empty()) return ont.find(act.domain) != nullptr;
  return ont.has_slot(act.domain, act.slot);
}

PolicyAction s1_infer(PolicyBackend& backend, const BeliefState& state,
                      const std::vector<CandidateAction>& available, const Ontology& ont) {
  if (available.empty()) throw std::invalid_argument("available actions must be non-empty");
  PolicyAction out = backend.infer(state, available);
  if (out.acts.empty()) throw BackendError(backend.id() + " returned no action");
  if (!(out.confidence >= 0.0 && out.confidence <= 1.0))
    throw BackendError(backend.id() + " returned confidence outside [0,1]");
  for (const auto& a : out.acts)
    if (!act_resolves(a, ont))
      throw BackendError(backend.id() + " returned unresolvable act " + to_string(a));
  return out;
}

double path_fill_score(const BeliefState& state, const Ontology& ont,
                       const ReasoningPath& path) {
  if (path.action_sequence.empty()) return 0.0;
  for (const auto& a : path.action_sequence)
    if (!act_resolves(a, ont)) return 0.0;
  BeliefState sim = state;
  sim.system_history.clear();
  sim.user_history.clear();
  for (const auto& a : path.action_sequence) apply_optimistic(sim, ont, a);
  return key_fill_ratio(sim, ont);
}

std::size_t rank_paths(const BeliefState& state, const Ontology& ont,
                       const std::vector<ReasoningPath>& paths) {
  if (paths.empty()) throw BackendError("no reasoning paths to rank");
  std::size_t best = 0;
  double best_score = -1.0;
  int best_id = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    double score = path_fill_score(state, ont, paths[i]);
    if (score > best_score ||
        (score == best_score && paths[i].sequence_id < best_id)) {
      best = i;
      best_score = score;
      best_id = paths[i].sequence_id;
    }
  }
  return best;
}

S2Outcome s2_deliberate(PolicyBackend& backend, const BeliefState& state,
                        const std::vector<CandidateAction>& available, const Ontology& ont,
                        const CognitiveState& c, TriggerReason trigger) {
  if (available.empty()) throw std::invalid_argument("available actions must be non-empty");
  S2Outcome out;
  out.paths = backend.deliberate(state, available, c, trigger);
  if (out.paths.empty()) throw BackendError(backend.id() + " returned no reasoning paths");
  out.chosen_index = static_cast<int>(rank_paths(state, ont, out.paths));
  const ReasoningPath& best = out.paths[static_cast<std::size_t>(out.chosen_index)];
  if (best.action_sequence.empty())
    throw BackendError(backend.id() + " best path has no actions");
  out.chosen = {best.action_sequence.front()};
  out.p_self = best.estimated_success_probability;
  return out;
}

// --- scripted backend --------------------------------------------------------

namespace {

const CandidateAction* first_by_priority(const std::vector<CandidateAction>& available,
                                         const std::vector<ActionTemplate>& order) {
  for (ActionTemplate want : order)
    for (const auto& c : available)
      if (c.kind == want) return &c;
  return available.empty() ? nullptr : &available.front();
}

double rule_confidence(ActionTemplate t) {
  switch (t) {
    case ActionTemplate::answer_request: return 0.95;
    case ActionTemplate::book_ready: return 0.92;
    case ActionTemplate::request_constraint: return 0.85;
    case ActionTemplate::request_book_slot: return 0.85;
    case ActionTemplate::confirm_slot: return 0.80;
    case ActionTemplate::say_goodbye: return 0.99;
  }
  return 0.5;
}

const std::vector<ActionTemplate> kGreedyOrder = {
    ActionTemplate::answer_request,     ActionTemplate::book_ready,
    ActionTemplate::request_constraint, ActionTemplate::request_book_slot,
    ActionTemplate::confirm_slot,       ActionTemplate::say_goodbye,
};

}  // namespace

PolicyAction ScriptedPolicy::infer(const BeliefState&,
                                   const std::vector<CandidateAction>& available) {
  const CandidateAction* pick = first_by_priority(available, kGreedyOrder);
  return PolicyAction{{pick->act}, rule_confidence(pick->kind)};
}

std::vector<ReasoningPath> ScriptedPolicy::deliberate(
    const BeliefState& state, const std::vector<CandidateAction>&, const CognitiveState&,
    TriggerReason) {
  // three tactical stances over the same template pool
  static const std::vector<ActionTemplate> conservative = {
      ActionTemplate::confirm_slot,       ActionTemplate::answer_request,
      ActionTemplate::book_ready,         ActionTemplate::request_book_slot,
      ActionTemplate::request_constraint, ActionTemplate::say_goodbye,
  };
  static const std::vector<ActionTemplate> proactive = {
      ActionTemplate::answer_request,     ActionTemplate::book_ready,
      ActionTemplate::request_constraint, ActionTemplate::request_book_slot,
      ActionTemplate::confirm_slot,       ActionTemplate::say_goodbye,
  };
  static const std::vector<ActionTemplate> hybrid = {
      ActionTemplate::answer_request,     ActionTemplate::confirm_slot,
      ActionTemplate::request_constraint, ActionTemplate::book_ready,
      ActionTemplate::request_book_slot,  ActionTemplate::say_goodbye,
  };

  constexpr int kHorizon = 3;
  std::vector<ReasoningPath> paths;
  int id = 1;
  for (const auto* order : {&conservative, &proactive, &hybrid}) {
    BeliefState sim = state;
    sim.system_history.clear();
    sim.user_history.clear();
    ReasoningPath p;
    p.sequence_id = id++;
    for (int step = 0; step < kHorizon; ++step) {
      auto avail = available_actions(sim, *ont_);
      const CandidateAction* pick = first_by_priority(avail, *order);
      p.action_sequence.push_back(pick->act);
      if (pick->kind == ActionTemplate::say_goodbye) break;
      apply_optimistic(sim, *ont_, pick->act);
    }
    p.estimated_success_probability =
        0.6 * key_fill_ratio(sim, *ont_) + 0.4 * completion_ratio(sim, *ont_);
    paths.push_back(std::move(p));
  }
  return paths;
}

// --- tabular softmax backend ---------------------------------------------------

std::uint32_t TabularSoftmaxPolicy::state_key(const std::vector<CandidateAction>& available) {
  std::uint32_t key = 0;
  for (const auto& c : available) key |= 1u << static_cast<int>(c.kind);
  return key;
}

std::array<double, kTemplateCount> TabularSoftmaxPolicy::softmax_over(
    std::uint32_t key, const std::vector<CandidateAction>& available) const {
  std::array<double, kTemplateCount> probs{};
  const std::array<double, kTemplateCount>* row = nullptr;
  if (auto it = logits_.find(key); it != logits_.end()) row = &it->second;

  double max_logit = -1e300;
  for (const auto& c : available) {
    double l = row ? (*row)[static_cast<int>(c.kind)] : 0.0;
    max_logit = std::max(max_logit, l);
  }
  double z = 0.0;
  for (const auto& c : available) {
    double l = row ? (*row)[static_cast<int>(c.kind)] : 0.0;
    double e = std::exp(l - max_logit);
    probs[static_cast<int>(c.kind)] = e;
    z += e;
  }
  for (auto& p : probs) p /= z;
  return probs;
}

PolicyAction TabularSoftmaxPolicy::infer(const BeliefState&,
                                         const std::vector<CandidateAction>& available) {
  const std::uint32_t key = state_key(available);
  auto probs = softmax_over(key, available);
  const CandidateAction* best = nullptr;
  double best_p = -1.0;
  for (const auto& c : available) {
    double p = probs[static_cast<int>(c.kind)];
    if (p > best_p) {  // ties keep the earlier (lower-index) template
      best_p = p;
      best = &c;
    }
  }
  return PolicyAction{{best->act}, best_p};
}

bool TabularSoftmaxPolicy::distill_pass(const std::deque<DistillRecord>& records,
                                        const Ontology& ont) {
  // one pass = one fixed increment per distinct demonstrated (key, template)
  // pair; scaling stored logits uniformly keeps every stored pair's
  // probability non-decreasing even when demonstrations conflict
  std::map<std::uint32_t, std::uint32_t> demo_bits;
  for (const auto& r : records) {
    if (r.action.empty()) continue;
    auto avail = available_actions(r.state, ont);
    for (const auto& c : avail) {
      if (c.act == r.action.front()) {
        demo_bits[state_key(avail)] |= 1u << static_cast<int>(c.kind);
        break;
      }
    }
  }
  for (const auto& [key, bits] : demo_bits) {
    auto& row = logits_[key];  // zero-initialized on first touch
    for (int k = 0; k < kTemplateCount; ++k)
      if (bits & (1u << k)) row[static_cast<std::size_t>(k)] += step_;
  }
  return !demo_bits.empty();
}

double TabularSoftmaxPolicy::action_probability(const BeliefState& state, const Ontology& ont,
                                                const ActList& acts) const {
  if (acts.empty()) return 0.0;
  auto avail = available_actions(state, ont);
  for (const auto& c : avail) {
    if (c.act == acts.front()) {
      auto probs = softmax_over(state_key(avail), avail);
      return probs[static_cast<int>(c.kind)];
    }
  }
  return 0.0;
}

nlohmann::json TabularSoftmaxPolicy::export_weights() const {
  nlohmann::json j;
  j["kind"] = "tabular_softmax";
  j["distill_step"] = step_;
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& [key, row] : logits_) rows[std::to_string(key)] = row;
  j["logits"] = std::move(rows);
  return j;
}

void TabularSoftmaxPolicy::import_weights(const nlohmann::json& j) {
  if (j.value("kind", "") != "tabular_softmax")
    throw ValidationError("weight file is not a tabular_softmax export");
  step_ = j.value("distill_step", step_);
  logits_.clear();
  for (const auto& [key, row] : j.at("logits").items()) {
    std::array<double, kTemplateCount> r{};
    std::size_t i = 0;
    for (const auto& v : row) {
      if (i >= r.size()) break;
      r[i++] = v.get<double>();
    }
    logits_[static_cast<std::uint32_t>(std::stoul(key))] = r;
  }
}

}  // namespace dualsys
