#include "dualsys/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace dualsys {

InformCounts inform_counts(const EvalInput& input) {
  InformCounts c;
  const UserGoal& goal = *input.goal;
  const ActList& log = *input.system_acts;

  for (const auto& g : goal.domains) {
    // slots informed with a non-null value at least once
    std::set<std::string> informed;
    for (const auto& a : log)
      if (a.type == ActType::inform && a.domain == g.domain && !is_null_value(a.value))
        informed.insert(a.slot);

    std::set<std::string> requested(g.requested.begin(), g.requested.end());
    for (const auto& r : requested)
      informed.count(r) ? ++c.tp : ++c.fn;
    for (const auto& s : informed)
      if (!requested.count(s) && !g.constraints.count(s)) ++c.fp;
  }
  return c;
}

double inform_rate(const InformCounts& c) {
  if (c.tp + c.fn == 0) return 1.0;  // nothing requested: trivially satisfied
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

double book_rate(const EvalInput& input) {
  const UserGoal& goal = *input.goal;
  const ActList& log = *input.system_acts;

  double sum = 0.0;
  int booking_domains = 0;
  for (const auto& g : goal.domains) {
    if (!g.wants_booking) continue;
    ++booking_domains;
    if (g.booking.empty()) {
      // constraint-free booking: any book act in the domain succeeds
      bool any = std::any_of(log.begin(), log.end(), [&](const DialogAct& a) {
        return a.type == ActType::book && a.domain == g.domain;
      });
      sum += any ? 1.0 : 0.0;
      continue;
    }
    int matched = 0;
    for (const auto& [slot, target] : g.booking) {
      bool hit = std::any_of(log.begin(), log.end(), [&](const DialogAct& a) {
        return a.type == ActType::book && a.domain == g.domain && a.slot == slot &&
               a.value == target;
      });
      if (hit) ++matched;
    }
    sum += static_cast<double>(matched) / static_cast<double>(g.booking.size());
  }
  if (booking_domains == 0) return 1.0;  // vacuous mean
  return sum / booking_domains;
}

int success(const EvalInput& input) {
  return inform_rate(inform_counts(input)) == 1.0 && book_rate(input) == 1.0 ? 1 : 0;
}

EpisodeScore score_episode(const EvalInput& input, int turns) {
  EpisodeScore s;
  s.counts = inform_counts(input);
  s.inform = inform_rate(s.counts);
  s.book = book_rate(input);
  s.success = (s.inform == 1.0 && s.book == 1.0) ? 1 : 0;
  s.turns = turns;
  return s;
}

AggregateReport aggregate(const std::vector<EpisodeScore>& scores) {
  AggregateReport r;
  r.episodes = static_cast<int>(scores.size());
  if (scores.empty()) return r;
  for (const auto& s : scores) {
    r.inform += s.inform;
    r.book += s.book;
    r.success += s.success;
    r.avg_turns += s.turns;
  }
  r.inform /= r.episodes;
  r.book /= r.episodes;
  r.success /= r.episodes;
  r.avg_turns /= r.episodes;
  return r;
}

std::string format_report_table(const AggregateReport& r) {
  char buf[256];
  std::string out = "Inform  Success  Book    Avg. Turns  Episodes\n";
  std::snprintf(buf, sizeof buf, "%-7.1f %-8.1f %-7.1f %-11.2f %d\n", r.inform * 100.0,
                r.success * 100.0, r.book * 100.0, r.avg_turns, r.episodes);
  out += buf;
  return out;
}

}  // namespace dualsys
