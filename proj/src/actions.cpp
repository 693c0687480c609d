#include "dualsys/actions.hpp"

namespace dualsys {

const char* to_string(ActionTemplate t) {
  switch (t) {
    case ActionTemplate::answer_request: return "answer_request";
    case ActionTemplate::book_ready: return "book_ready";
    case ActionTemplate::request_constraint: return "request_constraint";
    case ActionTemplate::request_book_slot: return "request_book_slot";
    case ActionTemplate::confirm_slot: return "confirm_slot";
    case ActionTemplate::say_goodbye: return "goodbye";
  }
  return "?";
}

static std::string answer_value(const DomainDef& dom, const std::string& slot,
                                const SlotEntry& e) {
  if (!e.value.empty()) return e.value;
  if (const SlotDef* s = dom.find_requestable(slot); s && !s->values.empty())
    return s->values.front();
  return slot + "-info";
}

static bool keys_filled(const BeliefState& state, const DomainDef& dom) {
  for (const auto& k : dom.key_slots) {
    const SlotEntry* e = state.find(dom.name, k);
    if (!e || e->value.empty()) return false;
  }
  return true;
}

std::vector<CandidateAction> available_actions(const BeliefState& state, const Ontology& ont) {
  std::vector<CandidateAction> out;

  // answer_request: first slot the user asked for and we have not answered
  for (const auto& [dname, slots] : state.table) {
    const DomainDef& dom = ont.at(dname);
    bool found = false;
    for (const auto& [sname, e] : slots) {
      if (e.status == SlotStatus::requested) {
        out.push_back({ActionTemplate::answer_request,
                       {ActType::inform, dname, sname, answer_value(dom, sname, e)}});
        found = true;
        break;
      }
    }
    if (found) break;
  }

  // book_ready: booking whose prerequisites (key slots, booking values) hold
  for (const auto& [dname, slots] : state.table) {
    const DomainDef& dom = ont.at(dname);
    if (!dom.bookable || !keys_filled(state, dom)) continue;
    if (dom.book_slots.empty()) {
      if (!state.booked_domains.count(dname)) {
        out.push_back({ActionTemplate::book_ready, {ActType::book, dname, "", ""}});
        break;
      }
      continue;
    }
    bool all_filled = true;
    const SlotDef* next_unbooked = nullptr;
    for (const auto& b : dom.book_slots) {
      const SlotEntry* e = state.find(dname, b.name);
      if (!e || e->value.empty()) {
        all_filled = false;
        break;
      }
      if (e->status != SlotStatus::booked && !next_unbooked) next_unbooked = &b;
    }
    if (all_filled && next_unbooked) {
      out.push_back({ActionTemplate::book_ready,
                     {ActType::book, dname, next_unbooked->name,
                      state.find(dname, next_unbooked->name)->value}});
      break;
    }
  }

  // request_constraint: first empty informable slot
  for (const auto& [dname, slots] : state.table) {
    const DomainDef& dom = ont.at(dname);
    bool found = false;
    for (const auto& s : dom.informable) {
      const SlotEntry* e = state.find(dname, s.name);
      if (e && e->status == SlotStatus::empty) {
        out.push_back({ActionTemplate::request_constraint, {ActType::request, dname, s.name, ""}});
        found = true;
        break;
      }
    }
    if (found) break;
  }

  // request_book_slot: first empty booking slot
  for (const auto& [dname, slots] : state.table) {
    const DomainDef& dom = ont.at(dname);
    if (!dom.bookable) continue;
    bool found = false;
    for (const auto& b : dom.book_slots) {
      const SlotEntry* e = state.find(dname, b.name);
      if (e && e->status == SlotStatus::empty) {
        out.push_back({ActionTemplate::request_book_slot, {ActType::request, dname, b.name, ""}});
        found = true;
        break;
      }
    }
    if (found) break;
  }

  // confirm_slot: first mentioned-but-unconfirmed slot
  for (const auto& [dname, slots] : state.table) {
    bool found = false;
    for (const auto& [sname, e] : slots) {
      if (e.status == SlotStatus::mentioned) {
        out.push_back({ActionTemplate::confirm_slot, {ActType::confirm, dname, sname, e.value}});
        found = true;
        break;
      }
    }
    if (found) break;
  }

  out.push_back({ActionTemplate::say_goodbye, {ActType::goodbye, "", "", ""}});
  return out;
}

void apply_optimistic(BeliefState& state, const Ontology& ont, const DialogAct& act) {
  if (act.type == ActType::goodbye || !state.has_domain(act.domain)) return;
  const DomainDef& dom = ont.at(act.domain);
  switch (act.type) {
    case ActType::request: {
      if (!state.find(act.domain, act.slot)) break;
      SlotEntry& e = state.entry(act.domain, act.slot);
      if (e.value.empty()) {
        const SlotDef* s = dom.find_informable(act.slot);
        if (!s) s = dom.find_book_slot(act.slot);
        e.value = s && !s->values.empty() ? s->values.front() : "assumed";
        e.status = SlotStatus::mentioned;
      }
      break;
    }
    case ActType::inform: {
      if (!state.find(act.domain, act.slot)) break;
      SlotEntry& e = state.entry(act.domain, act.slot);
      if (dom.find_requestable(act.slot)) {
        e = SlotEntry{act.value, SlotStatus::confirmed};
      } else if (e.status == SlotStatus::empty) {
        e = SlotEntry{act.value, SlotStatus::mentioned};
      } else if (e.status == SlotStatus::mentioned) {
        e.status = SlotStatus::confirmed;
      }
      break;
    }
    case ActType::confirm: {
      if (!state.find(act.domain, act.slot)) break;
      SlotEntry& e = state.entry(act.domain, act.slot);
      if (e.value.empty()) e.value = act.value.empty() ? "assumed" : act.value;
      if (e.status != SlotStatus::booked) e.status = SlotStatus::confirmed;
      break;
    }
    case ActType::book: {
      if (!dom.bookable) break;
      if (dom.book_slots.empty()) {
        state.booked_domains.insert(act.domain);
      } else if (state.find(act.domain, act.slot)) {
        SlotEntry& e = state.entry(act.domain, act.slot);
        if (!e.value.empty()) e.status = SlotStatus::booked;
      }
      break;
    }
    default: break;
  }
}

double key_fill_ratio(const BeliefState& state, const Ontology& ont) {
  int total = 0;
  int filled = 0;
  for (const auto& [dname, slots] : state.table) {
    const DomainDef& dom = ont.at(dname);
    for (const auto& k : dom.key_slots) {
      ++total;
      const SlotEntry* e = state.find(dname, k);
      if (e && !e->value.empty()) ++filled;
    }
  }
  if (total == 0) return 1.0;
  return static_cast<double>(filled) / static_cast<double>(total);
}

double completion_ratio(const BeliefState& state, const Ontology& ont) {
  int total = 0;
  int done = 0;
  for (const auto& [dname, slots] : state.table) {
    const DomainDef& dom = ont.at(dname);
    for (const auto& s : dom.requestable) {
      const SlotEntry* e = state.find(dname, s.name);
      if (!e) continue;
      if (e->status == SlotStatus::requested || e->status == SlotStatus::confirmed) {
        ++total;
        if (e->status == SlotStatus::confirmed) ++done;
      }
    }
    for (const auto& k : dom.key_slots) {
      ++total;
      const SlotEntry* e = state.find(dname, k);
      if (e && !e->value.empty()) ++done;
    }
    if (dom.bookable) {
      if (dom.book_slots.empty()) {
        ++total;
        if (state.booked_domains.count(dname)) ++done;
      } else {
        for (const auto& b : dom.book_slots) {
          ++total;
          const SlotEntry* e = state.find(dname, b.name);
          if (e && e->status == SlotStatus::booked) ++done;
        }
      }
    }
  }
  if (total == 0) return 1.0;
  return static_cast<double>(done) / static_cast<double>(total);
}

}  // namespace dualsys
