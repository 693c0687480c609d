#include "dualsys/belief.hpp"

namespace dualsys {

const char* to_string(SlotStatus s) {
  switch (s) {
    case SlotStatus::empty: return "empty";
    case SlotStatus::mentioned: return "mentioned";
    case SlotStatus::requested: return "requested";
    case SlotStatus::confirmed: return "confirmed";
    case SlotStatus::booked: return "booked";
  }
  return "?";
}

SlotStatus slot_status_from(const std::string& s) {
  if (s == "empty") return SlotStatus::empty;
  if (s == "mentioned") return SlotStatus::mentioned;
  if (s == "requested") return SlotStatus::requested;
  if (s == "confirmed") return SlotStatus::confirmed;
  if (s == "booked") return SlotStatus::booked;
  throw ValidationError("unknown slot status: " + s);
}

const SlotEntry* BeliefState::find(const std::string& domain, const std::string& slot) const {
  auto d = table.find(domain);
  if (d == table.end()) return nullptr;
  auto s = d->second.find(slot);
  return s == d->second.end() ? nullptr : &s->second;
}

SlotEntry& BeliefState::entry(const std::string& domain, const std::string& slot) {
  auto d = table.find(domain);
  if (d == table.end()) throw ValidationError("domain not in belief: " + domain);
  auto s = d->second.find(slot);
  if (s == d->second.end()) throw ValidationError("slot not in belief: " + domain + "." + slot);
  return s->second;
}

nlohmann::json BeliefState::core_json() const {
  nlohmann::json j;
  j["turn"] = turn;
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [dom, slots] : table) {
    nlohmann::json ds = nlohmann::json::object();
    for (const auto& [name, e] : slots)
      ds[name] = {{"value", e.value}, {"status", to_string(e.status)}};
    t[dom] = std::move(ds);
  }
  j["slots"] = std::move(t);
  j["booked_domains"] = booked_domains;
  return j;
}

BeliefState BeliefState::from_core_json(const nlohmann::json& j) {
  BeliefState b;
  b.turn = j.at("turn").get<int>();
  for (const auto& [dom, slots] : j.at("slots").items()) {
    auto& ds = b.table[dom];
    for (const auto& [name, e] : slots.items())
      ds[name] = SlotEntry{e.at("value").get<std::string>(),
                           slot_status_from(e.at("status").get<std::string>())};
  }
  if (j.contains("booked_domains"))
    for (const auto& d : j["booked_domains"]) b.booked_domains.insert(d.get<std::string>());
  return b;
}

std::uint64_t BeliefState::digest() const {
  // FNV-1a over the canonical core serialization
  std::string s = core_json().dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

BeliefState initial_belief(const UserGoal& goal, const Ontology& ont) {
  BeliefState b;
  for (const auto& g : goal.domains) {
    const DomainDef& d = ont.at(g.domain);
    auto& slots = b.table[g.domain];
    for (const auto& s : d.informable) slots.emplace(s.name, SlotEntry{});
    for (const auto& s : d.requestable) slots.emplace(s.name, SlotEntry{});
    for (const auto& s : d.book_slots) slots.emplace(s.name, SlotEntry{});
  }
  return b;
}

}  // namespace dualsys
