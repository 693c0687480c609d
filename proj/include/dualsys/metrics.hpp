#pragma once

#include <array>
#include <string>
#include <vector>

#include "dualsys/dialog_act.hpp"
#include "dualsys/ontology.hpp"

namespace dualsys {

// The three null-value literals of the MultiWOZ evaluation convention.
inline const std::array<std::string, 3> kNullValues = {"", "dont care", "not mentioned"};

inline bool is_null_value(const std::string& v) {
  return v == kNullValues[0] || v == kNullValues[1] || v == kNullValues[2];
}

// One scored episode: the goal and the system-side act log.
struct EvalInput {
  const UserGoal* goal;
  const ActList* system_acts;
};

struct InformCounts {
  int tp = 0;
  int fp = 0;
  int fn = 0;
};

// TP/FP/FN indicator sums over requested slots. FP counts informs of slots
// outside R_d and outside the goal's constraint set I_d.
InformCounts inform_counts(const EvalInput& input);

// TP / (TP + FN); a goal with no requested slots scores 1.
double inform_rate(const InformCounts& c);

// Mean booking success over booking domains; constraint-free booking domains
// count 1 iff any book act names them. No booking domains -> 1.
double book_rate(const EvalInput& input);

// 1 iff inform = 1 and book = 1.
int success(const EvalInput& input);

struct AggregateReport {
  double inform = 0.0;
  double success = 0.0;
  double book = 0.0;
  double avg_turns = 0.0;
  int episodes = 0;
};

struct EpisodeScore {
  InformCounts counts;
  double inform = 0.0;
  double book = 0.0;
  int success = 0;
  int turns = 0;
};

EpisodeScore score_episode(const EvalInput& input, int turns);
AggregateReport aggregate(const std::vector<EpisodeScore>& scores);
std::string format_report_table(const AggregateReport& r);

}  // namespace dualsys
