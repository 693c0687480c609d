#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dualsys/belief.hpp"
#include "dualsys/ontology.hpp"

namespace dualsys {

// The 3-vector c_t = [progress, uncertainty, dependency], each clamped to
// [0,1]. This is the entire context the meta-controller sees.
struct CognitiveState {
  double progress = 0.0;     // d_t = t / L
  double uncertainty = 0.0;  // u_t = |unconfirmed relevant| / |relevant|
  double dependency = 0.0;   // rho_t from the co-occurrence matrix

  bool operator==(const CognitiveState&) const = default;
};

// Discretized cell of the cognitive state space.
struct BinnedState {
  int d_bin = 0;
  int u_bin = 0;
  int rho_bin = 0;

  bool operator==(const BinnedState&) const = default;
  auto operator<=>(const BinnedState&) const = default;

  std::size_t flat_index(int bins) const {
    return (static_cast<std::size_t>(d_bin) * bins + u_bin) * bins + rho_bin;
  }
};

double compute_progress(int t, int cap);

// Fraction of relevant slots (informable slots of the belief's active
// domains) not yet confirmed or booked. Empty relevant set -> 0.
double compute_uncertainty(const BeliefState& state, const Ontology& ont);

enum class DependencyVariant {
  avg_pairwise,  // mean pairwise co-occurrence over active slots (default)
  max_unfilled,  // max over unfilled slots of mean co-occurrence with filled ones
};

double compute_dependency(const BeliefState& state, const Ontology& ont,
                          const CooccurrenceMatrix& m, DependencyVariant variant);

CognitiveState compute_cognitive(const BeliefState& state, const Ontology& ont,
                                 const CooccurrenceMatrix& m, int cap,
                                 DependencyVariant variant = DependencyVariant::avg_pairwise);

// Uniform bins over [0,1]; bin = min(floor(value * bins), bins - 1), so the
// closed upper boundary 1.0 falls in the last bin.
BinnedState discretize(const CognitiveState& c, int bins = 5);

// Cumulative visitation counts n(c) over cells plus the global step clock T.
// Per-worker tables are merged by addition at epoch barriers; the contract is
// that the merged result equals a serial run's counts.
class VisitationTable {
 public:
  explicit VisitationTable(int bins = 5);

  int bins() const { return bins_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(const BinnedState& b) const { return counts_[b.flat_index(bins_)]; }

  // counts[b] += 1, T += 1; returns the new count.
  std::uint64_t visit(const BinnedState& b);

  void merge(const VisitationTable& other);
  void write_csv(std::ostream& out) const;

  const std::vector<std::uint64_t>& raw() const { return counts_; }

 private:
  int bins_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace dualsys
