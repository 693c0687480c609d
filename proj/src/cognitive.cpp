#include "dualsys/cognitive.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace dualsys {

static double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

double compute_progress(int t, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  if (t < 0 || t > cap) throw std::invalid_argument("t out of [0, cap]");
  return static_cast<double>(t) / static_cast<double>(cap);
}

double compute_uncertainty(const BeliefState& state, const Ontology& ont) {
  int relevant = 0;
  int unconfirmed = 0;
  for (const auto& [dom, slots] : state.table) {
    const DomainDef* d = ont.find(dom);
    if (!d) continue;
    for (const auto& s : d->informable) {
      auto it = slots.find(s.name);
      if (it == slots.end()) continue;
      ++relevant;
      if (it->second.status != SlotStatus::confirmed && it->second.status != SlotStatus::booked)
        ++unconfirmed;
    }
  }
  if (relevant == 0) return 0.0;
  return static_cast<double>(unconfirmed) / static_cast<double>(relevant);
}

// Active slots: non-empty value anywhere in the table, addressed as global ids.
static void split_filled(const BeliefState& state, std::vector<std::string>& filled,
                         std::vector<std::string>& unfilled) {
  for (const auto& [dom, slots] : state.table)
    for (const auto& [name, e] : slots)
      (e.value.empty() ? unfilled : filled).push_back(dom + "." + name);
}

double compute_dependency(const BeliefState& state, const Ontology& ont,
                          const CooccurrenceMatrix& m, DependencyVariant variant) {
  (void)ont;
  std::vector<std::string> filled, unfilled;
  split_filled(state, filled, unfilled);

  if (variant == DependencyVariant::avg_pairwise) {
    const std::size_t n = filled.size();
    if (n < 2) return 0.0;
    std::vector<std::size_t> idx;
    idx.reserve(n);
    for (const auto& s : filled) idx.push_back(m.index_of(s));
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += m.at(idx[i], idx[j]);
    return clamp01(sum / (static_cast<double>(n) * static_cast<double>(n - 1)));
  }

  // max_unfilled: max over unfilled u of the mean co-occurrence M(u, f) with
  // the filled slots
  if (filled.empty() || unfilled.empty()) return 0.0;
  double best = 0.0;
  for (const auto& u : unfilled) {
    const std::size_t ui = m.index_of(u);
    double sum = 0.0;
    for (const auto& f : filled) sum += m.at(ui, m.index_of(f));
    best = std::max(best, sum / static_cast<double>(filled.size()));
  }
  return clamp01(best);
}

CognitiveState compute_cognitive(const BeliefState& state, const Ontology& ont,
                                 const CooccurrenceMatrix& m, int cap,
                                 DependencyVariant variant) {
  CognitiveState c;
  c.progress = clamp01(compute_progress(std::min(state.turn, cap), cap));
  c.uncertainty = clamp01(compute_uncertainty(state, ont));
  c.dependency = clamp01(compute_dependency(state, ont, m, variant));
  return c;
}

BinnedState discretize(const CognitiveState& c, int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  auto bin_of = [bins](double v) {
    int b = static_cast<int>(std::floor(v * bins));
    return std::min(std::max(b, 0), bins - 1);
  };
  return BinnedState{bin_of(c.progress), bin_of(c.uncertainty), bin_of(c.dependency)};
}

VisitationTable::VisitationTable(int bins) : bins_(bins) {
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  counts_.assign(static_cast<std::size_t>(bins) * bins * bins, 0);
}

std::uint64_t VisitationTable::visit(const BinnedState& b) {
  ++total_;
  return ++counts_[b.flat_index(bins_)];
}

void VisitationTable::merge(const VisitationTable& other) {
  if (other.bins_ != bins_) throw std::invalid_argument("bin count mismatch in merge");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

void VisitationTable::write_csv(std::ostream& out) const {
  out << "d_bin,u_bin,rho_bin,count\n";
  for (int d = 0; d < bins_; ++d)
    for (int u = 0; u < bins_; ++u)
      for (int r = 0; r < bins_; ++r)
        out << d << "," << u << "," << r << ","
            << counts_[BinnedState{d, u, r}.flat_index(bins_)] << "\n";
}

}  // namespace dualsys
