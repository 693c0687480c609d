#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "dualsys/dialog_act.hpp"
#include "dualsys/ontology.hpp"

namespace dualsys {

// Lifecycle of one slot within an episode. Upgrades are monotone except the
// explicit correction path (confirmed -> mentioned when the user re-issues a
// constraint after a wrong inform).
enum class SlotStatus { empty, mentioned, requested, confirmed, booked };

const char* to_string(SlotStatus s);
SlotStatus slot_status_from(const std::string& s);

struct SlotEntry {
  std::string value;
  SlotStatus status = SlotStatus::empty;

  bool operator==(const SlotEntry&) const = default;
};

// Observable dialog state s_t: per-domain slot table plus the turn clock and
// act history. The table holds exactly the goal's active domains; ordered maps
// keep iteration deterministic.
struct BeliefState {
  std::map<std::string, std::map<std::string, SlotEntry>> table;
  std::set<std::string> booked_domains;  // slot-free booking domains completed
  int turn = 0;
  ActList system_history;
  ActList user_history;

  const SlotEntry* find(const std::string& domain, const std::string& slot) const;
  SlotEntry& entry(const std::string& domain, const std::string& slot);
  bool has_domain(const std::string& domain) const { return table.count(domain) > 0; }

  // Core snapshot: table, bookings and turn clock; history is not part of it.
  nlohmann::json core_json() const;
  static BeliefState from_core_json(const nlohmann::json& j);
  std::uint64_t digest() const;

  bool operator==(const BeliefState& o) const {
    return table == o.table && booked_domains == o.booked_domains && turn == o.turn;
  }
};

// Empty belief over the goal's active domains (every ontology slot present
// with empty status).
BeliefState initial_belief(const UserGoal& goal, const Ontology& ont);

}  // namespace dualsys
