#include "ptc/filtering.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptc {

unsigned rule_set_from_letter(char letter) {
  switch (letter) {
    case '_': return kNoRules;
    case 'L': return kRuleFlowtimeExtended;
    case 'F': return kRuleMaxFamilyJobs;
    case 'M': return kRuleMaxMachineJobs;
    case 'A': return kRulesAll;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown rule set letter: ") + letter);
}

char rule_set_letter(unsigned rules) {
  switch (rules) {
    case kNoRules: return '_';
    case kRuleFlowtimeExtended: return 'L';
    case kRuleMaxFamilyJobs: return 'F';
    case kRuleMaxMachineJobs: return 'M';
    case kRulesAll: return 'A';
    default: break;
  }
  throw std::invalid_argument("rule set has no single-letter name");
}

DomainStore::DomainStore(const Instance& inst) : inst_(&inst) {
  const std::int64_t n = inst.total_jobs();
  std::int64_t max_proc = 0;
  std::int64_t max_setup = 0;
  for (const Family& f : inst.families) {
    max_proc = std::max<std::int64_t>(max_proc, f.proc);
    max_setup = std::max<std::int64_t>(max_setup, f.setup);
  }
  sentinel_ = n * n * (max_proc + max_setup) + 1;

  const int machines = inst.machines;
  const int families = inst.family_count();
  decided_.assign(machines, std::vector<int>(families, 0));
  decided_total_.assign(machines, 0);
  flowtime_machine_.assign(machines, Bounds{0, sentinel_});
  nb_jobs_machine_.assign(machines, Bounds{0, n});
  nb_jobs_family_.assign(machines, std::vector<Bounds>(families, Bounds{0, 0}));
  for (int m = 1; m <= machines; ++m) {
    for (int f = 1; f <= families; ++f) {
      if (inst.qualified(f, m)) {
        nb_jobs_family_[m - 1][f - 1] = Bounds{0, inst.family(f).jobs};
      }
    }
  }
  flowtime_total_ = Bounds{0, sentinel_};
}

void DomainStore::decide(int family, int machine) {
  int& count = decided_[machine - 1][family - 1];
  ++count;
  ++decided_total_[machine - 1];
  tighten_lb(nb_jobs_family_[machine - 1][family - 1], count);
  tighten_lb(nb_jobs_machine_[machine - 1], decided_total_[machine - 1]);
}

void DomainStore::close_machine(int machine) {
  tighten_ub(nb_jobs_machine_[machine - 1], decided_total_[machine - 1]);
  for (int f = 1; f <= inst_->family_count(); ++f) {
    if (inst_->qualified(f, machine)) {
      tighten_ub(nb_jobs_family_[machine - 1][f - 1],
                 decided_[machine - 1][f - 1]);
    }
  }
}

int DomainStore::decided_count(int family, int machine) const {
  return decided_[machine - 1][family - 1];
}

int DomainStore::decided_total(int machine) const {
  return decided_total_[machine - 1];
}

int DomainStore::unassigned_count(int family) const {
  int assigned = 0;
  for (const auto& row : decided_) assigned += row[family - 1];
  return inst_->family(family).jobs - assigned;
}

Bounds DomainStore::flowtime_machine(int machine) const {
  return flowtime_machine_[machine - 1];
}

Bounds DomainStore::nb_jobs_machine(int machine) const {
  return nb_jobs_machine_[machine - 1];
}

Bounds DomainStore::nb_jobs_family(int family, int machine) const {
  return nb_jobs_family_[machine - 1][family - 1];
}

Bounds DomainStore::flowtime_total() const { return flowtime_total_; }

void DomainStore::tighten_flowtime_machine_lb(int machine, std::int64_t v) {
  tighten_lb(flowtime_machine_[machine - 1], v);
}

void DomainStore::tighten_flowtime_machine_ub(int machine, std::int64_t v) {
  tighten_ub(flowtime_machine_[machine - 1], v);
}

void DomainStore::tighten_nb_jobs_machine_lb(int machine, std::int64_t v) {
  tighten_lb(nb_jobs_machine_[machine - 1], v);
}

void DomainStore::tighten_nb_jobs_machine_ub(int machine, std::int64_t v) {
  tighten_ub(nb_jobs_machine_[machine - 1], v);
}

void DomainStore::tighten_nb_jobs_family_lb(int family, int machine,
                                            std::int64_t v) {
  tighten_lb(nb_jobs_family_[machine - 1][family - 1], v);
}

void DomainStore::tighten_nb_jobs_family_ub(int family, int machine,
                                            std::int64_t v) {
  tighten_ub(nb_jobs_family_[machine - 1][family - 1], v);
}

void DomainStore::tighten_flowtime_total_lb(std::int64_t v) {
  tighten_lb(flowtime_total_, v);
}

void DomainStore::tighten_flowtime_total_ub(std::int64_t v) {
  tighten_ub(flowtime_total_, v);
}

std::vector<JobGroup> DomainStore::decided_groups(int machine) const {
  std::vector<JobGroup> groups;
  for (int f = 1; f <= inst_->family_count(); ++f) {
    int count = decided_[machine - 1][f - 1];
    if (count == 0) continue;
    const Family& fam = inst_->family(f);
    groups.push_back(JobGroup{f, count, fam.proc, fam.setup});
  }
  return groups;
}

std::vector<JobGroup> DomainStore::spt_extension(int count) const {
  struct Pool {
    std::int64_t proc;
    int family;
    int available;
  };
  std::vector<Pool> pools;
  for (int f = 1; f <= inst_->family_count(); ++f) {
    int available = unassigned_count(f);
    if (available > 0) pools.push_back(Pool{inst_->family(f).proc, f, available});
  }
  std::sort(pools.begin(), pools.end(), [](const Pool& a, const Pool& b) {
    return a.proc != b.proc ? a.proc < b.proc : a.family < b.family;
  });

  std::vector<JobGroup> extension;
  const int offset = inst_->family_count();
  for (const Pool& pool : pools) {
    if (count <= 0) break;
    int take = std::min(count, pool.available);
    extension.push_back(JobGroup{pool.family + offset, take, pool.proc, 0});
    count -= take;
  }
  return extension;
}

bool DomainStore::same_bounds(const DomainStore& other) const {
  auto eq = [](const Bounds& a, const Bounds& b) {
    return a.lb == b.lb && a.ub == b.ub;
  };
  if (failed_ != other.failed_) return false;
  if (decided_ != other.decided_) return false;
  if (flowtime_total_.lb != other.flowtime_total_.lb ||
      flowtime_total_.ub != other.flowtime_total_.ub) {
    return false;
  }
  for (std::size_t m = 0; m < flowtime_machine_.size(); ++m) {
    if (!eq(flowtime_machine_[m], other.flowtime_machine_[m])) return false;
    if (!eq(nb_jobs_machine_[m], other.nb_jobs_machine_[m])) return false;
    for (std::size_t f = 0; f < nb_jobs_family_[m].size(); ++f) {
      if (!eq(nb_jobs_family_[m][f], other.nb_jobs_family_[m][f])) return false;
    }
  }
  return true;
}

void DomainStore::tighten_lb(Bounds& b, std::int64_t v) {
  if (v > b.lb) {
    b.lb = v;
    if (b.lb > b.ub) failed_ = true;
  }
}

void DomainStore::tighten_ub(Bounds& b, std::int64_t v) {
  if (v < b.ub) {
    b.ub = v;
    if (b.lb > b.ub) failed_ = true;
  }
}

namespace {

// Raises lb(flowtime_machine) to `bound`; reports what happened.
RuleOutcome apply_flowtime_lb(DomainStore& store, int machine,
                              std::int64_t bound) {
  Bounds before = store.flowtime_machine(machine);
  if (bound > before.ub) {
    store.mark_failed();
    return RuleOutcome::kFail;
  }
  if (bound <= before.lb) return RuleOutcome::kNoChange;
  store.tighten_flowtime_machine_lb(machine, bound);
  return RuleOutcome::kTightened;
}

std::int64_t optimal_flowtime(const std::vector<JobGroup>& groups) {
  return sequence_optimal(groups).flowtime;
}

}  // namespace

RuleOutcome rule_flowtime_assigned(DomainStore& store, int machine) {
  if (store.failed()) return RuleOutcome::kFail;
  std::vector<JobGroup> groups = store.decided_groups(machine);
  if (groups.empty()) return RuleOutcome::kNoChange;
  return apply_flowtime_lb(store, machine, optimal_flowtime(groups));
}

RuleOutcome rule_flowtime_extended(DomainStore& store, int machine) {
  if (store.failed()) return RuleOutcome::kFail;
  std::vector<JobGroup> groups = store.decided_groups(machine);
  std::int64_t missing =
      store.nb_jobs_machine(machine).lb - store.decided_total(machine);
  if (missing > 0) {
    std::vector<JobGroup> extra =
        store.spt_extension(static_cast<int>(missing));
    groups.insert(groups.end(), extra.begin(), extra.end());
  }
  if (groups.empty()) return RuleOutcome::kNoChange;
  return apply_flowtime_lb(store, machine, optimal_flowtime(groups));
}

RuleOutcome rule_max_family_jobs(DomainStore& store, int family, int machine) {
  if (store.failed()) return RuleOutcome::kFail;
  const std::int64_t cap = store.flowtime_machine(machine).ub;
  if (cap >= store.sentinel()) return RuleOutcome::kNoChange;

  const Family& fam = store.instance().family(family);
  const std::int64_t decided = store.decided_count(family, machine);
  // FT*(A_m with the family's count raised to k) fits under the cap. The
  // relaxation flow time is non-decreasing in k, so a dichotomy applies.
  auto fits = [&](std::int64_t k) {
    std::vector<JobGroup> groups = store.decided_groups(machine);
    bool present = false;
    for (JobGroup& g : groups) {
      if (g.family == family) {
        g.count = static_cast<int>(k);
        present = true;
      }
    }
    if (!present && k > 0) {
      groups.push_back(JobGroup{family, static_cast<int>(k), fam.proc, fam.setup});
    }
    if (groups.empty()) return true;
    return optimal_flowtime(groups) <= cap;
  };

  if (!fits(decided)) {
    store.mark_failed();
    return RuleOutcome::kFail;
  }
  std::int64_t lo = decided;
  std::int64_t hi = store.nb_jobs_family(family, machine).ub;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  Bounds before = store.nb_jobs_family(family, machine);
  if (lo >= before.ub) return RuleOutcome::kNoChange;
  store.tighten_nb_jobs_family_ub(family, machine, lo);
  return store.failed() ? RuleOutcome::kFail : RuleOutcome::kTightened;
}

RuleOutcome rule_max_machine_jobs(DomainStore& store, int machine) {
  if (store.failed()) return RuleOutcome::kFail;
  const std::int64_t cap = store.flowtime_machine(machine).ub;
  if (cap >= store.sentinel()) return RuleOutcome::kNoChange;

  const std::int64_t decided = store.decided_total(machine);
  // Candidate totals are probed with the cheapest unassigned jobs, setup
  // free, so the probe undercuts any real completion of that many jobs.
  auto fits = [&](std::int64_t k) {
    std::vector<JobGroup> groups = store.decided_groups(machine);
    if (k > decided) {
      std::vector<JobGroup> extra =
          store.spt_extension(static_cast<int>(k - decided));
      groups.insert(groups.end(), extra.begin(), extra.end());
    }
    if (groups.empty()) return true;
    return optimal_flowtime(groups) <= cap;
  };

  if (!fits(decided)) {
    store.mark_failed();
    return RuleOutcome::kFail;
  }
  std::int64_t lo = decided;
  std::int64_t hi = store.nb_jobs_machine(machine).ub;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  Bounds before = store.nb_jobs_machine(machine);
  if (lo >= before.ub) return RuleOutcome::kNoChange;
  store.tighten_nb_jobs_machine_ub(machine, lo);
  return store.failed() ? RuleOutcome::kFail : RuleOutcome::kTightened;
}

bool sum_consistency_pass(DomainStore& store) {
  if (store.failed()) return false;
  const Instance& inst = store.instance();
  const int machines = inst.machines;
  const int families = inst.family_count();
  bool changed = false;

  auto note = [&](Bounds before, Bounds after) {
    if (before.lb != after.lb || before.ub != after.ub) changed = true;
  };

  // Family totals: the jobs of each family split across its machines.
  for (int f = 1; f <= families; ++f) {
    const std::int64_t total = inst.family(f).jobs;
    std::int64_t lb_sum = 0;
    std::int64_t ub_sum = 0;
    for (int m = 1; m <= machines; ++m) {
      if (!inst.qualified(f, m)) continue;
      lb_sum += store.nb_jobs_family(f, m).lb;
      ub_sum += store.nb_jobs_family(f, m).ub;
    }
    if (lb_sum > total || ub_sum < total) {
      store.mark_failed();
      return true;
    }
    for (int m = 1; m <= machines; ++m) {
      if (!inst.qualified(f, m)) continue;
      Bounds b = store.nb_jobs_family(f, m);
      store.tighten_nb_jobs_family_lb(f, m, total - (ub_sum - b.ub));
      store.tighten_nb_jobs_family_ub(f, m, total - (lb_sum - b.lb));
      note(b, store.nb_jobs_family(f, m));
      if (store.failed()) return true;
    }
  }

  // Machine job counts as the sum of their family counts.
  for (int m = 1; m <= machines; ++m) {
    std::int64_t lb_sum = 0;
    std::int64_t ub_sum = 0;
    for (int f = 1; f <= families; ++f) {
      if (!inst.qualified(f, m)) continue;
      lb_sum += store.nb_jobs_family(f, m).lb;
      ub_sum += store.nb_jobs_family(f, m).ub;
    }
    Bounds mb = store.nb_jobs_machine(m);
    store.tighten_nb_jobs_machine_lb(m, lb_sum);
    store.tighten_nb_jobs_machine_ub(m, ub_sum);
    note(mb, store.nb_jobs_machine(m));
    if (store.failed()) return true;
    mb = store.nb_jobs_machine(m);
    for (int f = 1; f <= families; ++f) {
      if (!inst.qualified(f, m)) continue;
      Bounds b = store.nb_jobs_family(f, m);
      store.tighten_nb_jobs_family_lb(f, m, mb.lb - (ub_sum - b.ub));
      store.tighten_nb_jobs_family_ub(f, m, mb.ub - (lb_sum - b.lb));
      note(b, store.nb_jobs_family(f, m));
      if (store.failed()) return true;
    }
  }

  // All machine counts add up to the number of jobs.
  {
    const std::int64_t total = inst.total_jobs();
    std::int64_t lb_sum = 0;
    std::int64_t ub_sum = 0;
    for (int m = 1; m <= machines; ++m) {
      lb_sum += store.nb_jobs_machine(m).lb;
      ub_sum += store.nb_jobs_machine(m).ub;
    }
    if (lb_sum > total || ub_sum < total) {
      store.mark_failed();
      return true;
    }
    for (int m = 1; m <= machines; ++m) {
      Bounds b = store.nb_jobs_machine(m);
      store.tighten_nb_jobs_machine_lb(m, total - (ub_sum - b.ub));
      store.tighten_nb_jobs_machine_ub(m, total - (lb_sum - b.lb));
      note(b, store.nb_jobs_machine(m));
      if (store.failed()) return true;
    }
  }

  // Flow time: the machine contributions add up to the global objective.
  {
    std::int64_t lb_sum = 0;
    std::int64_t ub_sum = 0;
    for (int m = 1; m <= machines; ++m) {
      lb_sum += store.flowtime_machine(m).lb;
      ub_sum += store.flowtime_machine(m).ub;
    }
    Bounds tb = store.flowtime_total();
    store.tighten_flowtime_total_lb(lb_sum);
    store.tighten_flowtime_total_ub(ub_sum);
    note(tb, store.flowtime_total());
    if (store.failed()) return true;
    tb = store.flowtime_total();
    for (int m = 1; m <= machines; ++m) {
      Bounds b = store.flowtime_machine(m);
      store.tighten_flowtime_machine_lb(m, tb.lb - (ub_sum - b.ub));
      store.tighten_flowtime_machine_ub(m, tb.ub - (lb_sum - b.lb));
      note(b, store.flowtime_machine(m));
      if (store.failed()) return true;
    }
  }

  return changed;
}

bool propagate(DomainStore& store, unsigned rules) {
  if (store.failed()) return false;
  const Instance& inst = store.instance();
  bool changed = true;
  while (changed && !store.failed()) {
    changed = sum_consistency_pass(store);
    if (store.failed()) break;
    for (int m = 1; m <= inst.machines && !store.failed(); ++m) {
      if (rules & kRuleFlowtimeExtended) {
        if (rule_flowtime_extended(store, m) == RuleOutcome::kTightened) {
          changed = true;
        }
      } else if (rules & kRuleFlowtimeAssigned) {
        if (rule_flowtime_assigned(store, m) == RuleOutcome::kTightened) {
          changed = true;
        }
      }
      if (rules & kRuleMaxFamilyJobs) {
        for (int f = 1; f <= inst.family_count() && !store.failed(); ++f) {
          if (!inst.qualified(f, m)) continue;
          if (rule_max_family_jobs(store, f, m) == RuleOutcome::kTightened) {
            changed = true;
          }
        }
      }
      if (rules & kRuleMaxMachineJobs) {
        if (rule_max_machine_jobs(store, m) == RuleOutcome::kTightened) {
          changed = true;
        }
      }
    }
  }
  return !store.failed();
}

}  // namespace ptc
