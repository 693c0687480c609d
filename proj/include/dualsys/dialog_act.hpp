#pragma once

#include <string>
#include <vector>

#include "dualsys/errors.hpp"

namespace dualsys {

enum class ActType { inform, request, confirm, book, goodbye };

inline const char* to_string(ActType t) {
  switch (t) {
    case ActType::inform: return "inform";
    case ActType::request: return "request";
    case ActType::confirm: return "confirm";
    case ActType::book: return "book";
    case ActType::goodbye: return "goodbye";
  }
  return "?";
}

inline ActType act_type_from(const std::string& s) {
  if (s == "inform") return ActType::inform;
  if (s == "request") return ActType::request;
  if (s == "confirm") return ActType::confirm;
  if (s == "book") return ActType::book;
  if (s == "goodbye") return ActType::goodbye;
  throw ValidationError("unknown act type: " + s);
}

// Atomic unit of policy output and user input. Domain/slot may be empty only
// for goodbye (and for domain-level book acts in slot-free booking domains).
struct DialogAct {
  ActType type = ActType::goodbye;
  std::string domain;
  std::string slot;
  std::string value;

  bool operator==(const DialogAct&) const = default;
};

inline std::string to_string(const DialogAct& a) {
  return std::string(to_string(a.type)) + "(" + a.domain + "," + a.slot + "," + a.value + ")";
}

using ActList = std::vector<DialogAct>;

}  // namespace dualsys
