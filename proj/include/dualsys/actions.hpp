#pragma once

#include <cstdint>
#include <vector>

#include "dualsys/belief.hpp"
#include "dualsys/dialog_act.hpp"
#include "dualsys/ontology.hpp"

namespace dualsys {

// Semantically valid things the system can do next, in priority order. The
// action generator materializes at most one concrete act per template.
enum class ActionTemplate {
  answer_request,      // inform a slot the user asked for
  book_ready,          // issue the next booking act once prerequisites hold
  request_constraint,  // ask for an unfilled informable slot
  request_book_slot,   // ask for an unfilled booking slot
  confirm_slot,        // confirm a mentioned-but-unconfirmed slot
  say_goodbye,         // end the dialog
};

inline constexpr int kTemplateCount = 6;

const char* to_string(ActionTemplate t);

struct CandidateAction {
  ActionTemplate kind;
  DialogAct act;
};

// Enumerate the currently valid candidate actions from the belief state alone
// (policies never see the goal). Deterministic; goodbye is always present.
std::vector<CandidateAction> available_actions(const BeliefState& state, const Ontology& ont);

// Apply an act under optimistic user cooperation: a requested slot counts as
// filled, informs and confirms land, bookings with known values succeed. Used
// by System-2 path scoring, never by the environment.
void apply_optimistic(BeliefState& state, const Ontology& ont, const DialogAct& act);

// Filled key slots / total key slots over the active domains (1 when there
// are no key slots).
double key_fill_ratio(const BeliefState& state, const Ontology& ont);

// Fraction of visible work units done: pending/answered user requests,
// booking slots booked, slot-free domains booked, key slots filled.
double completion_ratio(const BeliefState& state, const Ontology& ont);

}  // namespace dualsys
