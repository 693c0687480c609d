#pragma once

#include <cstddef>
#include <deque>
#include <iosfwd>
#include <string>

#include "dualsys/belief.hpp"
#include "dualsys/dialog_act.hpp"

namespace dualsys {

class PolicyBackend;
class Ontology;

// One high-confidence System-2 decision kept for teaching System 1.
struct DistillRecord {
  BeliefState state;
  ActList action;
  double p_self = 0.0;
};

inline constexpr double kDistillGate = 0.9;  // store only p_self > 0.9

// FIFO buffer of distillation demonstrations.
class DistillBuffer {
 public:
  explicit DistillBuffer(std::size_t capacity = 10000) : capacity_(capacity) {}

  // Stores iff p_self clears the gate (strict). At capacity the oldest record
  // is evicted first.
  bool maybe_store(DistillRecord record);

  std::size_t size() const { return records_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return records_.empty(); }
  const std::deque<DistillRecord>& records() const { return records_; }

  std::size_t stored_total() const { return stored_total_; }
  std::size_t rejected_total() const { return rejected_total_; }

  // Line-delimited export: a metadata header record, then one record per line.
  void export_jsonl(std::ostream& out, int period) const;

 private:
  std::deque<DistillRecord> records_;
  std::size_t capacity_;
  std::size_t stored_total_ = 0;
  std::size_t rejected_total_ = 0;
};

// Periodic System-1 update: fires only when epoch is a positive multiple of
// period and the buffer is non-empty. Backends that cannot learn in place
// report false; the caller exports the buffer for external training instead.
bool run_distillation(DistillBuffer& buffer, PolicyBackend& backend, const Ontology& ont,
                      int epoch, int period = 10);

}  // namespace dualsys
