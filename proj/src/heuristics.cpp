#include "ptc/heuristics.hpp"

#include <algorithm>
#include <vector>

namespace ptc {

namespace {

// Shared greedy state: appends at machine ends only, so feasibility of a
// placement is "start within the pair's deadline".
struct GreedyState {
  const Instance* inst;
  std::vector<int> remaining;                       // per family
  std::vector<std::int64_t> avail;                  // per machine
  std::vector<int> last_family;                     // per machine, -1 if empty
  std::vector<std::vector<std::int64_t>> last_start;  // [f][m], -1 = never ran

  explicit GreedyState(const Instance& instance)
      : inst(&instance),
        avail(static_cast<std::size_t>(instance.machines), 0),
        last_family(static_cast<std::size_t>(instance.machines), -1),
        last_start(instance.families.size(),
                   std::vector<std::int64_t>(
                       static_cast<std::size_t>(instance.machines), -1)) {
    for (const Family& f : inst->families) remaining.push_back(f.jobs);
  }

  int total_remaining() const {
    int total = 0;
    for (int r : remaining) total += r;
    return total;
  }

  std::int64_t start_of(int f, int m) const {
    std::int64_t t = avail[static_cast<std::size_t>(m - 1)];
    if (last_family[static_cast<std::size_t>(m - 1)] >= 0 &&
        last_family[static_cast<std::size_t>(m - 1)] != f) {
      t += inst->family(f).setup;
    }
    return t;
  }

  // Latest start keeping the start-to-start constraint of (f, m).
  std::int64_t deadline(int f, int m) const {
    std::int64_t prev = last_start[static_cast<std::size_t>(f - 1)]
                                  [static_cast<std::size_t>(m - 1)];
    return prev < 0 ? inst->family(f).gamma : prev + inst->family(f).gamma;
  }

  bool placeable(int f, int m) const {
    return remaining[static_cast<std::size_t>(f - 1)] > 0 &&
           inst->qualified(f, m) && start_of(f, m) <= deadline(f, m);
  }

  void place(int f, int m, Schedule& s) {
    std::int64_t start = start_of(f, m);
    std::int64_t completion = start + inst->family(f).proc;
    s.machines[static_cast<std::size_t>(m - 1)].push_back({f, start, completion});
    avail[static_cast<std::size_t>(m - 1)] = completion;
    last_family[static_cast<std::size_t>(m - 1)] = f;
    last_start[static_cast<std::size_t>(f - 1)][static_cast<std::size_t>(m - 1)] =
        start;
    remaining[static_cast<std::size_t>(f - 1)] -= 1;
  }
};

}  // namespace

std::optional<Schedule> scheduling_centric(const Instance& inst) {
  GreedyState state(inst);
  Schedule s;
  s.machines.resize(static_cast<std::size_t>(inst.machines));

  for (int left = state.total_remaining(); left > 0; --left) {
    int best_f = -1;
    int best_m = -1;
    std::int64_t best_completion = 0;
    for (int f = 1; f <= inst.family_count(); ++f) {
      for (int m = 1; m <= inst.machines; ++m) {
        if (!state.placeable(f, m)) continue;
        std::int64_t completion = state.start_of(f, m) + inst.family(f).proc;
        if (best_f < 0 || completion < best_completion) {
          best_f = f;
          best_m = m;
          best_completion = completion;
        }
      }
    }
    if (best_f < 0) return std::nullopt;
    state.place(best_f, best_m, s);
  }
  return s;
}

std::optional<Schedule> qualification_centric(const Instance& inst) {
  GreedyState state(inst);
  Schedule s;
  s.machines.resize(static_cast<std::size_t>(inst.machines));

  for (int left = state.total_remaining(); left > 0; --left) {
    // Machines in availability order, then id.
    std::vector<int> order;
    for (int m = 1; m <= inst.machines; ++m) order.push_back(m);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      auto av = state.avail[static_cast<std::size_t>(a - 1)];
      auto bv = state.avail[static_cast<std::size_t>(b - 1)];
      return av != bv ? av < bv : a < b;
    });

    bool placed = false;
    for (int m : order) {
      int best_f = -1;
      for (int f = 1; f <= inst.family_count(); ++f) {
        if (!state.placeable(f, m)) continue;
        if (best_f < 0 || state.deadline(f, m) < state.deadline(best_f, m)) {
          best_f = f;
        }
      }
      if (best_f >= 0) {
        state.place(best_f, m, s);
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  return s;
}

}  // namespace ptc
