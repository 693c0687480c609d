#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dualsys/errors.hpp"

namespace dualsys {

struct SlotDef {
  std::string name;
  std::vector<std::string> values;  // candidate values; may be empty for file-loaded ontologies
};

// One task domain: constraint slots the user supplies, slots the user may ask
// for, booking constraint slots, and the key slots System-2 scoring tracks.
struct DomainDef {
  std::string name;
  std::vector<SlotDef> informable;
  std::vector<SlotDef> requestable;
  std::vector<SlotDef> book_slots;  // empty for slot-free booking domains (taxi style)
  bool bookable = false;
  std::vector<std::string> key_slots;  // subset of informable

  const SlotDef* find_informable(const std::string& s) const;
  const SlotDef* find_requestable(const std::string& s) const;
  const SlotDef* find_book_slot(const std::string& s) const;
  bool has_slot(const std::string& s) const;
};

class Ontology {
 public:
  explicit Ontology(std::vector<DomainDef> domains);

  static Ontology from_json_file(const std::string& path);
  static Ontology from_json_text(const std::string& text);

  const std::vector<DomainDef>& domains() const { return domains_; }
  const DomainDef* find(const std::string& domain) const;
  const DomainDef& at(const std::string& domain) const;
  bool has_slot(const std::string& domain, const std::string& slot) const;

  // Global identifiers "domain.slot" over every slot section, in a fixed order.
  const std::vector<std::string>& slot_ids() const { return slot_ids_; }
  bool has_slot_id(const std::string& id) const { return id_index_.count(id) > 0; }

 private:
  std::vector<DomainDef> domains_;
  std::vector<std::string> slot_ids_;
  std::unordered_map<std::string, std::size_t> id_index_;
};

// Built-in desk-scale scenarios.
Ontology builtin_ontology(const std::string& scenario);  // "restaurant" | "taxi" | "multi"

// --- user goals ------------------------------------------------------------

struct DomainGoal {
  std::string domain;
  std::map<std::string, std::string> constraints;  // informable slot -> target value
  std::vector<std::string> requested;              // R_d
  std::map<std::string, std::string> booking;      // B_d (book slot -> value)
  bool wants_booking = false;
};

struct UserGoal {
  std::vector<DomainGoal> domains;

  const DomainGoal* find(const std::string& domain) const;
};

void validate_goal(const UserGoal& goal, const Ontology& ont);

// Deterministic in (ontology, seed, domain_count); samples constraint values
// uniformly, 1-3 requested slots per domain, and booking constraints for
// bookable domains.
UserGoal generate_goal(const Ontology& ont, std::uint64_t seed, int domain_count);

// --- slot co-occurrence ----------------------------------------------------

// Active-slot set of one annotated dialog turn, as global "domain.slot" ids.
struct CorpusTurn {
  std::vector<std::string> slots;
};

// Line-delimited corpus: one JSON array of slot-identifier strings per line.
// Unknown identifiers raise ValidationError listing all offenders.
std::vector<CorpusTurn> load_corpus(const std::string& path, const Ontology& ont);
std::vector<CorpusTurn> parse_corpus(std::istream& in, const Ontology& ont);

// Conditional co-occurrence M[i][j] = count(i and j) / count(i) over the
// ontology's global slot ids. Rows with count(i) = 0 are all zero.
class CooccurrenceMatrix {
 public:
  CooccurrenceMatrix() = default;
  CooccurrenceMatrix(std::vector<std::string> ids, std::vector<double> m,
                     std::vector<std::int64_t> counts);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  bool has(const std::string& id) const { return index_.count(id) > 0; }
  std::size_t index_of(const std::string& id) const;

  double at(std::size_t i, std::size_t j) const { return m_[i * ids_.size() + j]; }
  double at(const std::string& i, const std::string& j) const;
  std::int64_t count(std::size_t i) const { return counts_[i]; }

  void write_csv(std::ostream& out) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> m_;
  std::vector<std::int64_t> counts_;
};

CooccurrenceMatrix build_cooccurrence(const std::vector<CorpusTurn>& turns, const Ontology& ont);

// Synthetic corpus for scenarios without an annotated one: sampled goals
// unrolled into cumulative active-slot sets, one dialog per goal.
std::vector<CorpusTurn> make_fixture_corpus(const Ontology& ont, std::uint64_t seed,
                                            std::size_t turns);

}  // namespace dualsys
