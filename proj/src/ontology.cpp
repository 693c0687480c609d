#include "dualsys/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dualsys/rng.hpp"

namespace dualsys {

using nlohmann::json;

static const SlotDef* find_in(const std::vector<SlotDef>& v, const std::string& s) {
  for (const auto& d : v)
    if (d.name == s) return &d;
  return nullptr;
}

const SlotDef* DomainDef::find_informable(const std::string& s) const { return find_in(informable, s); }
const SlotDef* DomainDef::find_requestable(const std::string& s) const { return find_in(requestable, s); }
const SlotDef* DomainDef::find_book_slot(const std::string& s) const { return find_in(book_slots, s); }

bool DomainDef::has_slot(const std::string& s) const {
  return find_informable(s) || find_requestable(s) || find_book_slot(s);
}

Ontology::Ontology(std::vector<DomainDef> domains) : domains_(std::move(domains)) {
  if (domains_.empty()) throw ValidationError("ontology has no domains");
  std::set<std::string> names;
  for (const auto& d : domains_) {
    if (!names.insert(d.name).second) throw ValidationError("duplicate domain: " + d.name);
    // slot names must be unique within a domain; the one allowed overlap is a
    // slot that is both informable and requestable
    std::set<std::string> seen;
    auto add_section = [&](const std::vector<SlotDef>& sec, bool allow_requestable_overlap) {
      for (const auto& s : sec) {
        bool fresh = seen.insert(s.name).second;
        if (!fresh && !(allow_requestable_overlap && d.find_informable(s.name) &&
                        &sec == &d.requestable))
          throw ValidationError("duplicate slot '" + s.name + "' in domain " + d.name);
        std::string id = d.name + "." + s.name;
        if (!id_index_.count(id)) {
          id_index_.emplace(id, slot_ids_.size());
          slot_ids_.push_back(id);
        }
      }
    };
    add_section(d.informable, false);
    add_section(d.requestable, true);
    add_section(d.book_slots, false);
    for (const auto& k : d.key_slots)
      if (!d.find_informable(k))
        throw ValidationError("key slot '" + k + "' is not informable in domain " + d.name);
    if (!d.book_slots.empty() && !d.bookable)
      throw ValidationError("domain " + d.name + " has book slots but is not bookable");
  }
}

const DomainDef* Ontology::find(const std::string& domain) const {
  for (const auto& d : domains_)
    if (d.name == domain) return &d;
  return nullptr;
}

const DomainDef& Ontology::at(const std::string& domain) const {
  const DomainDef* d = find(domain);
  if (!d) throw ValidationError("unknown domain: " + domain);
  return *d;
}

bool Ontology::has_slot(const std::string& domain, const std::string& slot) const {
  const DomainDef* d = find(domain);
  return d && d->has_slot(slot);
}

static std::vector<SlotDef> parse_slot_section(const json& j) {
  std::vector<SlotDef> out;
  if (j.is_null()) return out;
  for (const auto& e : j) {
    SlotDef s;
    s.name = e.at("name").get<std::string>();
    if (e.contains("values"))
      for (const auto& v : e["values"]) s.values.push_back(v.get<std::string>());
    out.push_back(std::move(s));
  }
  return out;
}

Ontology Ontology::from_json_text(const std::string& text) {
  json j = json::parse(text);
  std::vector<DomainDef> domains;
  for (const auto& jd : j.at("domains")) {
    DomainDef d;
    d.name = jd.at("name").get<std::string>();
    if (jd.contains("informable")) d.informable = parse_slot_section(jd["informable"]);
    if (jd.contains("requestable")) d.requestable = parse_slot_section(jd["requestable"]);
    if (jd.contains("book_slots")) d.book_slots = parse_slot_section(jd["book_slots"]);
    d.bookable = jd.value("bookable", false);
    if (jd.contains("key_slots"))
      for (const auto& k : jd["key_slots"]) d.key_slots.push_back(k.get<std::string>());
    domains.push_back(std::move(d));
  }
  return Ontology(std::move(domains));
}

Ontology Ontology::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open ontology file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

static SlotDef slot(std::string name, std::vector<std::string> values) {
  return SlotDef{std::move(name), std::move(values)};
}

Ontology builtin_ontology(const std::string& scenario) {
  DomainDef restaurant;
  restaurant.name = "restaurant";
  restaurant.informable = {
      slot("area", {"north", "south", "centre", "east", "west"}),
      slot("food", {"chinese", "italian", "indian", "british", "thai"}),
      slot("pricerange", {"cheap", "moderate", "expensive"}),
  };
  restaurant.requestable = {
      slot("address", {"12 bridge street", "5 mill lane", "83 regent street"}),
      slot("phone", {"01223-346354", "01223-812660", "01223-566188"}),
      slot("postcode", {"cb21ab", "cb43le", "cb58aq"}),
  };
  restaurant.book_slots = {
      slot("book_day", {"monday", "tuesday", "friday", "sunday"}),
      slot("book_people", {"1", "2", "4", "6"}),
      slot("book_time", {"12:00", "17:30", "19:00"}),
  };
  restaurant.bookable = true;
  restaurant.key_slots = {"area", "food"};

  DomainDef hotel;
  hotel.name = "hotel";
  hotel.informable = {
      slot("area", {"north", "south", "centre", "east", "west"}),
      slot("parking", {"yes", "no"}),
      slot("pricerange", {"cheap", "moderate", "expensive"}),
      slot("stars", {"2", "3", "4", "5"}),
  };
  hotel.requestable = {
      slot("address", {"back lane", "74 chesterton road", "kingfisher way"}),
      slot("phone", {"01223-227977", "01223-351241", "01223-662960"}),
  };
  hotel.book_slots = {
      slot("book_day", {"monday", "wednesday", "saturday"}),
      slot("book_people", {"1", "2", "3", "5"}),
      slot("book_stay", {"1", "2", "4"}),
  };
  hotel.bookable = true;
  hotel.key_slots = {"area", "pricerange"};

  DomainDef taxi;
  taxi.name = "taxi";
  taxi.informable = {
      slot("departure", {"city centre", "railway station", "museum", "airport"}),
      slot("destination", {"city centre", "railway station", "museum", "airport"}),
      slot("leave_at", {"08:00", "11:15", "14:30", "21:45"}),
  };
  taxi.requestable = {
      slot("car_type", {"grey ford", "white bmw", "black skoda"}),
      slot("phone", {"07218-068540", "07343-113906"}),
  };
  taxi.bookable = true;  // slot-free booking: any book act completes it
  taxi.key_slots = {"departure", "destination"};

  if (scenario == "restaurant") return Ontology({restaurant});
  if (scenario == "hotel") return Ontology({hotel});
  if (scenario == "taxi") return Ontology({taxi});
  if (scenario == "multi") return Ontology({hotel, restaurant, taxi});
  throw ConfigError("unknown scenario: " + scenario);
}

// --- goals -------------------------------------------------------------

const DomainGoal* UserGoal::find(const std::string& domain) const {
  for (const auto& d : domains)
    if (d.domain == domain) return &d;
  return nullptr;
}

void validate_goal(const UserGoal& goal, const Ontology& ont) {
  if (goal.domains.empty()) throw ValidationError("goal has no active domains");
  for (const auto& g : goal.domains) {
    const DomainDef& d = ont.at(g.domain);
    for (const auto& [s, v] : g.constraints)
      if (!d.find_informable(s))
        throw ValidationError("goal constraint '" + s + "' not informable in " + g.domain);
    for (const auto& r : g.requested)
      if (!d.find_requestable(r))
        throw ValidationError("goal request '" + r + "' not requestable in " + g.domain);
    for (const auto& [b, v] : g.booking)
      if (!d.find_book_slot(b))
        throw ValidationError("goal booking slot '" + b + "' unknown in " + g.domain);
    if (g.wants_booking && !d.bookable)
      throw ValidationError("goal wants booking in non-bookable domain " + g.domain);
  }
}

UserGoal generate_goal(const Ontology& ont, std::uint64_t seed, int domain_count) {
  const auto& domains = ont.domains();
  if (domain_count < 1 || domain_count > static_cast<int>(domains.size()))
    throw std::invalid_argument("domain_count out of range: " + std::to_string(domain_count));

  Rng rng = Rng::stream(seed, 0x60A1ULL);
  std::vector<std::size_t> order(domains.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  order.resize(static_cast<std::size_t>(domain_count));
  std::sort(order.begin(), order.end());  // stable domain order inside the goal

  UserGoal goal;
  for (std::size_t di : order) {
    const DomainDef& d = domains[di];
    DomainGoal g;
    g.domain = d.name;
    for (const auto& s : d.informable) {
      if (s.values.empty()) continue;
      if (rng.next_bool(0.75)) g.constraints[s.name] = rng.pick(s.values);
    }
    if (g.constraints.empty() && !d.informable.empty() && !d.informable.front().values.empty())
      g.constraints[d.informable.front().name] = rng.pick(d.informable.front().values);

    if (!d.requestable.empty()) {
      std::size_t want = 1 + rng.next_below(3);  // 1-3 requested slots
      want = std::min(want, d.requestable.size());
      std::vector<std::size_t> ridx(d.requestable.size());
      for (std::size_t i = 0; i < ridx.size(); ++i) ridx[i] = i;
      rng.shuffle(ridx);
      ridx.resize(want);
      std::sort(ridx.begin(), ridx.end());
      for (std::size_t i : ridx) g.requested.push_back(d.requestable[i].name);
    }

    if (d.bookable) {
      g.wants_booking = true;
      for (const auto& b : d.book_slots)
        if (!b.values.empty()) g.booking[b.name] = rng.pick(b.values);
    }
    goal.domains.push_back(std::move(g));
  }
  return goal;
}

// --- corpus + co-occurrence ---------------------------------------------

std::vector<CorpusTurn> parse_corpus(std::istream& in, const Ontology& ont) {
  std::vector<CorpusTurn> turns;
  std::vector<std::string> unknown;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw ParseError("expected a JSON array of slot identifiers", lineno);
    CorpusTurn t;
    std::set<std::string> seen;
    for (const auto& e : j) {
      if (!e.is_string()) throw ParseError("slot identifier is not a string", lineno);
      std::string id = e.get<std::string>();
      if (!ont.has_slot_id(id)) {
        unknown.push_back(id + " (line " + std::to_string(lineno) + ")");
        continue;
      }
      if (seen.insert(id).second) t.slots.push_back(std::move(id));
    }
    turns.push_back(std::move(t));
  }
  if (!unknown.empty()) {
    std::string msg = "unknown slot identifiers:";
    for (const auto& u : unknown) msg += " " + u;
    throw ValidationError(msg);
  }
  return turns;
}

std::vector<CorpusTurn> load_corpus(const std::string& path, const Ontology& ont) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus file: " + path);
  return parse_corpus(in, ont);
}

CooccurrenceMatrix::CooccurrenceMatrix(std::vector<std::string> ids, std::vector<double> m,
                                       std::vector<std::int64_t> counts)
    : ids_(std::move(ids)), m_(std::move(m)), counts_(std::move(counts)) {
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);
}

std::size_t CooccurrenceMatrix::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ValidationError("slot id not in matrix: " + id);
  return it->second;
}

double CooccurrenceMatrix::at(const std::string& i, const std::string& j) const {
  return at(index_of(i), index_of(j));
}

void CooccurrenceMatrix::write_csv(std::ostream& out) const {
  out << "slot";
  for (const auto& id : ids_) out << "," << id;
  out << "\n";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    out << ids_[i];
    for (std::size_t j = 0; j < ids_.size(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof buf, ",%.6f", at(i, j));
      out << buf;
    }
    out << "\n";
  }
}

CooccurrenceMatrix build_cooccurrence(const std::vector<CorpusTurn>& turns, const Ontology& ont) {
  const auto& ids = ont.slot_ids();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

  const std::size_t n = ids.size();
  std::vector<std::int64_t> joint(n * n, 0);
  std::vector<std::int64_t> counts(n, 0);
  for (const auto& t : turns) {
    std::vector<std::size_t> active;
    active.reserve(t.slots.size());
    for (const auto& s : t.slots) active.push_back(index.at(s));
    for (std::size_t a : active) {
      ++counts[a];
      for (std::size_t b : active) ++joint[a * n + b];
    }
  }
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] == 0) continue;  // whole row stays zero; avoids 0/0
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = static_cast<double>(joint[i * n + j]) / static_cast<double>(counts[i]);
  }
  return CooccurrenceMatrix({ids.begin(), ids.end()}, std::move(m), std::move(counts));
}

std::vector<CorpusTurn> make_fixture_corpus(const Ontology& ont, std::uint64_t seed,
                                            std::size_t turns) {
  std::vector<CorpusTurn> out;
  Rng rng = Rng::stream(seed, 0xC0F7ULL);
  std::uint64_t goal_seed = 0;
  const int max_domains = static_cast<int>(std::min<std::size_t>(ont.domains().size(), 2));
  while (out.size() < turns) {
    int dc = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_domains)));
    UserGoal goal = generate_goal(ont, seed * 7919 + (goal_seed++), dc);
    // unroll the goal as a dialog: slots become active one by one, each turn
    // records the cumulative active set
    std::vector<std::string> reveal;
    for (const auto& g : goal.domains) {
      for (const auto& [s, v] : g.constraints) reveal.push_back(g.domain + "." + s);
      for (const auto& [b, v] : g.booking) reveal.push_back(g.domain + "." + b);
      for (const auto& r : g.requested) reveal.push_back(g.domain + "." + r);
    }
    std::vector<std::size_t> order(reveal.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    CorpusTurn turn;
    for (std::size_t i : order) {
      turn.slots.push_back(reveal[i]);
      out.push_back(turn);
      if (out.size() >= turns) break;
    }
  }
  return out;
}

}  // namespace dualsys
