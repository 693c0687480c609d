#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dualsys/actions.hpp"
#include "dualsys/belief.hpp"
#include "dualsys/cognitive.hpp"
#include "dualsys/distill.hpp"
#include "dualsys/meta_controller.hpp"

namespace dualsys {

struct PolicyAction {
  ActList acts;
  double confidence = 0.0;  // in [0,1]
};

// One System-2 candidate plan with the backend's own success estimate.
struct ReasoningPath {
  int sequence_id = 0;
  ActList action_sequence;
  double estimated_success_probability = 0.0;
};

// A policy implementation: built-in (scripted rules, tabular softmax) or a
// remote service speaking the wire protocol.
class PolicyBackend {
 public:
  virtual ~PolicyBackend() = default;
  virtual std::string id() const = 0;
  virtual bool supports_s1() const { return false; }
  virtual bool supports_s2() const { return false; }

  // Fast path: one action plus a confidence score.
  virtual PolicyAction infer(const BeliefState& state,
                             const std::vector<CandidateAction>& available);

  // Slow path: Top-3 candidate action sequences.
  virtual std::vector<ReasoningPath> deliberate(const BeliefState& state,
                                                const std::vector<CandidateAction>& available,
                                                const CognitiveState& c, TriggerReason trigger);

  // One supervised pass over the buffer; false when not learnable in place.
  virtual bool distill_pass(const std::deque<DistillRecord>& records, const Ontology& ont);
};

// --- shared System-1 / System-2 entry points --------------------------------

// Validates availability and the returned action/confidence contract.
PolicyAction s1_infer(PolicyBackend& backend, const BeliefState& state,
                      const std::vector<CandidateAction>& available, const Ontology& ont);

struct S2Outcome {
  ActList chosen;                    // first act of the best path
  double p_self = 0.0;               // the chosen path's own success estimate
  std::vector<ReasoningPath> paths;  // all returned paths
  int chosen_index = 0;
};

// Scores each path by simulating it optimistically and taking the filled-key-
// slot ratio; the best path wins, ties break toward the lower sequence_id, and
// a path with an act that does not resolve scores 0.
double path_fill_score(const BeliefState& state, const Ontology& ont, const ReasoningPath& path);
std::size_t rank_paths(const BeliefState& state, const Ontology& ont,
                       const std::vector<ReasoningPath>& paths);

S2Outcome s2_deliberate(PolicyBackend& backend, const BeliefState& state,
                        const std::vector<CandidateAction>& available, const Ontology& ont,
                        const CognitiveState& c, TriggerReason trigger);

// --- built-in backends -------------------------------------------------------

// Deterministic rule policy. As System 1 it plays the highest-priority
// available action with a fixed per-rule confidence; as System 2 it plans
// conservative / proactive / hybrid three-act sequences.
class ScriptedPolicy : public PolicyBackend {
 public:
  explicit ScriptedPolicy(const Ontology& ont) : ont_(&ont) {}
  std::string id() const override { return "scripted"; }
  bool supports_s1() const override { return true; }
  bool supports_s2() const override { return true; }

  PolicyAction infer(const BeliefState& state,
                     const std::vector<CandidateAction>& available) override;
  std::vector<ReasoningPath> deliberate(const BeliefState& state,
                                        const std::vector<CandidateAction>& available,
                                        const CognitiveState& c, TriggerReason trigger) override;
  bool distill_pass(const std::deque<DistillRecord>&, const Ontology&) override { return false; }

 private:
  const Ontology* ont_;
};

// Learnable System 1: softmax over action templates, keyed by the set of
// currently available templates. Distillation adds a fixed logit increment to
// each distinct demonstrated (key, template) pair, which never decreases a
// stored pair's probability.
class TabularSoftmaxPolicy : public PolicyBackend {
 public:
  explicit TabularSoftmaxPolicy(double distill_step = 1.0) : step_(distill_step) {}
  std::string id() const override { return "tabular"; }
  bool supports_s1() const override { return true; }

  PolicyAction infer(const BeliefState& state,
                     const std::vector<CandidateAction>& available) override;
  bool distill_pass(const std::deque<DistillRecord>& records, const Ontology& ont) override;

  static std::uint32_t state_key(const std::vector<CandidateAction>& available);

  // Softmax probability this policy assigns to `acts` in `state`; 0 when the
  // action matches no candidate.
  double action_probability(const BeliefState& state, const Ontology& ont,
                            const ActList& acts) const;

  nlohmann::json export_weights() const;
  void import_weights(const nlohmann::json& j);

 private:
  std::array<double, kTemplateCount> softmax_over(
      std::uint32_t key, const std::vector<CandidateAction>& available) const;

  double step_;
  std::map<std::uint32_t, std::array<double, kTemplateCount>> logits_;
};

}  // namespace dualsys
