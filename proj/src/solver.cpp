#include "ptc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptc/heuristics.hpp"

namespace ptc {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "OPTIMAL";
    case SolveStatus::kSatisfiable: return "SATISFIABLE";
    case SolveStatus::kUnknown: return "UNKNOWN";
    case SolveStatus::kInfeasible: return "INFEASIBLE";
  }
  return "UNKNOWN";
}

namespace {

using Clock = std::chrono::steady_clock;

struct MachineState {
  std::vector<int> seq;
  std::vector<std::int64_t> last_start;  // [f-1], -1 when the family never ran
  std::int64_t avail = 0;
  std::int64_t prefix_flowtime = 0;
  int last_family = -1;
  bool open = true;
};

enum class Goal { kMinFlowtime, kMinDisq, kMinWeighted };

struct Incumbent {
  ObjectivePair objective;
  Schedule schedule;
};

// Depth-first branch and bound over per-machine family sequences. Exactly one
// machine (the open one with the lexicographically least sequence, ties by
// id) accepts actions at a node: append a job of some family, or close. That
// designation makes the path to any final set of sequences unique. Schedules
// are built left-packed; since every flow-time-optimal schedule is
// left-packed, nothing is lost.
class Search {
 public:
  Search(const Instance& inst, const SolverConfig& cfg, SolveStats& stats,
         std::optional<Incumbent> incumbent)
      : inst_(inst),
        cfg_(cfg),
        stats_(stats),
        incumbent_(std::move(incumbent)) {
    for (int f = 1; f <= inst.family_count(); ++f) family_order_.push_back(f);
    std::sort(family_order_.begin(), family_order_.end(), [&](int a, int b) {
      std::int64_t pa = inst.family(a).proc;
      std::int64_t pb = inst.family(b).proc;
      return pa != pb ? pa < pb : a < b;
    });
    weight_ = 1;
    for (const Family& f : inst.families) {
      weight_ += static_cast<std::int64_t>(f.qualified.size());
    }
    if (cfg.time_limit_s > 0.0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(
                                         cfg.time_limit_s));
    }
  }

  std::int64_t weight() const { return weight_; }
  const std::optional<Incumbent>& incumbent() const { return incumbent_; }

  /// Runs one search phase from scratch; the incumbent carries over between
  /// phases. Returns true when the space was exhausted (no limit hit).
  bool run(Goal goal) {
    goal_ = goal;
    machines_.assign(inst_.machines, MachineState{});
    for (MachineState& m : machines_) {
      m.last_start.assign(inst_.family_count(), -1);
    }
    assigned_ = 0;

    DomainStore root(inst_);
    if (auto cap = flowtime_cap()) root.tighten_flowtime_total_ub(*cap);
    if (!propagate(root, cfg_.rules)) {
      ++stats_.fails;
      return true;
    }
    dfs(root);
    return !limit_hit_;
  }

 private:
  // Inclusive bound on the total flow time a useful solution may have.
  std::optional<std::int64_t> flowtime_cap() const {
    if (!incumbent_) return std::nullopt;
    switch (goal_) {
      case Goal::kMinFlowtime:
        return incumbent_->objective.flowtime - 1;
      case Goal::kMinDisq:
        return incumbent_->objective.flowtime;
      case Goal::kMinWeighted:
        // Anything better satisfies weight*ft <= incumbent_value - 1.
        return (weighted_value(incumbent_->objective) - 1) / weight_;
    }
    return std::nullopt;
  }

  std::int64_t weighted_value(const ObjectivePair& pair) const {
    return weight_ * pair.flowtime + pair.disqualified;
  }

  int designated_machine() const {
    int best = 0;
    for (int m = 1; m <= inst_.machines; ++m) {
      if (!machines_[m - 1].open) continue;
      if (best == 0 || machines_[m - 1].seq < machines_[best - 1].seq) {
        best = m;
      }
    }
    return best;
  }

  void handle_leaf() {
    std::vector<std::vector<int>> seqs;
    seqs.reserve(machines_.size());
    for (const MachineState& m : machines_) seqs.push_back(m.seq);
    Schedule schedule = left_pack(inst_, seqs);
    ObjectivePair pair{flowtime(schedule),
                       count_disqualifications(inst_, schedule).count};
    switch (goal_) {
      case Goal::kMinFlowtime:
        if (!incumbent_ || pair.flowtime < incumbent_->objective.flowtime) {
          incumbent_ = Incumbent{pair, std::move(schedule)};
        }
        break;
      case Goal::kMinDisq:
        if (pair.flowtime == incumbent_->objective.flowtime &&
            pair.disqualified < incumbent_->objective.disqualified) {
          incumbent_ = Incumbent{pair, std::move(schedule)};
          if (pair.disqualified == 0) done_ = true;
        }
        break;
      case Goal::kMinWeighted:
        if (!incumbent_ ||
            weighted_value(pair) < weighted_value(incumbent_->objective)) {
          incumbent_ = Incumbent{pair, std::move(schedule)};
        }
        break;
    }
  }

  void dfs(const DomainStore& store) {
    if (limit_hit_ || done_) return;
    if (deadline_ && Clock::now() > *deadline_) {
      limit_hit_ = true;
      return;
    }
    if (cfg_.node_limit > 0 && stats_.nodes >= cfg_.node_limit) {
      limit_hit_ = true;
      return;
    }
    ++stats_.nodes;
    if (cfg_.store_observer && *cfg_.store_observer) {
      (*cfg_.store_observer)(store);
    }

    if (assigned_ == inst_.total_jobs()) {
      handle_leaf();
      return;
    }

    const int dm = designated_machine();
    if (dm == 0) return;
    MachineState& ms = machines_[dm - 1];

    for (int f : family_order_) {
      if (limit_hit_ || done_) return;
      if (store.unassigned_count(f) <= 0) continue;
      if (!inst_.qualified(f, dm)) continue;
      if (store.decided_count(f, dm) + 1 > store.nb_jobs_family(f, dm).ub) {
        continue;
      }
      if (store.decided_total(dm) + 1 > store.nb_jobs_machine(dm).ub) continue;

      const Family& fam = inst_.family(f);
      std::int64_t start = ms.avail;
      if (ms.last_family >= 0 && ms.last_family != f) start += fam.setup;
      std::int64_t latest = ms.last_start[f - 1] < 0
                                ? fam.gamma
                                : ms.last_start[f - 1] + fam.gamma;
      if (start > latest) continue;

      DomainStore child = store;
      child.decide(f, dm);
      std::int64_t completion = start + fam.proc;
      child.tighten_flowtime_machine_lb(dm, ms.prefix_flowtime + completion);
      if (auto cap = flowtime_cap()) child.tighten_flowtime_total_ub(*cap);
      if (!propagate(child, cfg_.rules)) {
        ++stats_.fails;
        continue;
      }

      MachineState saved = ms;
      ms.seq.push_back(f);
      ms.last_start[f - 1] = start;
      ms.avail = completion;
      ms.prefix_flowtime += completion;
      ms.last_family = f;
      ++assigned_;
      dfs(child);
      --assigned_;
      ms = std::move(saved);
    }
    if (limit_hit_ || done_) return;

    // Final child: this machine takes no further jobs.
    DomainStore child = store;
    child.close_machine(dm);
    if (auto cap = flowtime_cap()) child.tighten_flowtime_total_ub(*cap);
    if (!propagate(child, cfg_.rules)) {
      ++stats_.fails;
      return;
    }
    ms.open = false;
    dfs(child);
    ms.open = true;
  }

  const Instance& inst_;
  const SolverConfig& cfg_;
  SolveStats& stats_;
  std::optional<Incumbent> incumbent_;
  std::vector<int> family_order_;
  std::vector<MachineState> machines_;
  std::int64_t weight_ = 1;
  int assigned_ = 0;
  Goal goal_ = Goal::kMinFlowtime;
  std::optional<Clock::time_point> deadline_;
  bool limit_hit_ = false;
  bool done_ = false;  // proven-unbeatable incumbent, e.g. zero losses
};

std::optional<Incumbent> warm_incumbent(const Instance& inst,
                                        const SolverConfig& cfg,
                                        SolveStats& stats) {
  if (!cfg.warm_start) return std::nullopt;
  std::optional<Incumbent> best;
  for (std::optional<Schedule> schedule :
       {scheduling_centric(inst), qualification_centric(inst)}) {
    if (!schedule) continue;
    ObjectivePair pair{flowtime(*schedule),
                       count_disqualifications(inst, *schedule).count};
    if (!best || pair < best->objective) {
      best = Incumbent{pair, std::move(*schedule)};
    }
  }
  if (best) stats.warm_start_flowtime = best->objective.flowtime;
  return best;
}

void fill_from_incumbent(SolveResult& result,
                         const std::optional<Incumbent>& incumbent) {
  if (!incumbent) return;
  result.objective = incumbent->objective;
  result.schedule = incumbent->schedule;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

SolveResult solve_lex(const Instance& inst, const SolverConfig& cfg) {
  const auto t0 = Clock::now();
  SolveResult result;
  Search search(inst, cfg, result.stats, warm_incumbent(inst, cfg, result.stats));

  bool exhausted = search.run(Goal::kMinFlowtime);
  if (!exhausted) {
    result.status = search.incumbent() ? SolveStatus::kSatisfiable
                                       : SolveStatus::kUnknown;
  } else if (!search.incumbent()) {
    result.status = SolveStatus::kInfeasible;
  } else {
    bool proven = true;
    if (search.incumbent()->objective.disqualified > 0) {
      proven = search.run(Goal::kMinDisq);
    }
    result.status =
        proven ? SolveStatus::kOptimal : SolveStatus::kSatisfiable;
  }
  fill_from_incumbent(result, search.incumbent());
  result.stats.wall_s = seconds_since(t0);
  return result;
}

SolveResult solve_weighted(const Instance& inst, const SolverConfig& cfg) {
  const auto t0 = Clock::now();
  SolveResult result;
  Search search(inst, cfg, result.stats, warm_incumbent(inst, cfg, result.stats));

  bool exhausted = search.run(Goal::kMinWeighted);
  if (exhausted) {
    result.status = search.incumbent() ? SolveStatus::kOptimal
                                       : SolveStatus::kInfeasible;
  } else {
    result.status = search.incumbent() ? SolveStatus::kSatisfiable
                                       : SolveStatus::kUnknown;
  }
  fill_from_incumbent(result, search.incumbent());
  result.stats.wall_s = seconds_since(t0);
  return result;
}

SolveResult solve(const Instance& inst, const SolverConfig& cfg) {
  return cfg.aggregation == Aggregation::kWeightedSum ? solve_weighted(inst, cfg)
                                                      : solve_lex(inst, cfg);
}

std::int64_t flowtime_lower_bound(const Instance& inst, unsigned rules) {
  DomainStore store(inst);
  if (!propagate(store, rules)) return store.sentinel();
  return store.flowtime_total().lb;
}

std::optional<ObjectivePair> brute_force_solve(const Instance& inst,
                                               int job_cap) {
  if (inst.total_jobs() > job_cap) {
    throw std::invalid_argument("instance too large for exhaustive solve");
  }
  const int machines = inst.machines;
  const int families = inst.family_count();
  std::vector<int> remaining(families);
  for (int f = 1; f <= families; ++f) remaining[f - 1] = inst.family(f).jobs;

  std::vector<std::vector<int>> seqs(machines);
  std::optional<ObjectivePair> best;

  auto evaluate = [&]() {
    Schedule schedule = left_pack(inst, seqs);
    if (!check_validity(inst, schedule).empty()) return;
    ObjectivePair pair{flowtime(schedule),
                       count_disqualifications(inst, schedule).count};
    if (!best || pair < *best) best = pair;
  };

  // Machine by machine: pick how many jobs of each family it takes (the last
  // machine takes the rest), then try every distinct order of that multiset.
  std::function<void(int)> place_machine = [&](int m) {
    if (m > machines) {
      evaluate();
      return;
    }
    std::vector<int> take(families, 0);
    std::function<void(int)> choose = [&](int f) {
      if (f > families) {
        std::vector<int> labels;
        for (int ff = 1; ff <= families; ++ff) {
          labels.insert(labels.end(), take[ff - 1], ff);
        }
        std::sort(labels.begin(), labels.end());
        do {
          seqs[m - 1] = labels;
          place_machine(m + 1);
        } while (std::next_permutation(labels.begin(), labels.end()));
        seqs[m - 1].clear();
        return;
      }
      const int limit = remaining[f - 1];
      const int lo = m == machines ? limit : 0;
      for (int c = lo; c <= limit; ++c) {
        if (c > 0 && !inst.qualified(f, m)) break;
        take[f - 1] = c;
        remaining[f - 1] -= c;
        choose(f + 1);
        remaining[f - 1] += c;
        take[f - 1] = 0;
      }
    };
    choose(1);
  };
  place_machine(1);
  return best;
}

}  // namespace ptc
