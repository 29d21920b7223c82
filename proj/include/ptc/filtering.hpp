#pragma once

#include <cstdint>
#include <vector>

#include "ptc/instance.hpp"
#include "ptc/relaxation.hpp"

namespace ptc {

struct Bounds {
  std::int64_t lb = 0;
  std::int64_t ub = 0;
};

/// Cost-based filtering rules, combinable as a bitmask. The single-letter
/// sets mirror the algorithm naming scheme: L enables the extended flow-time
/// bound, F the per-family count filter, M the per-machine count filter, A
/// all of them (the plain assigned-jobs bound is subsumed by L).
enum RuleFlag : unsigned {
  kNoRules = 0u,
  kRuleFlowtimeAssigned = 1u << 0,
  kRuleFlowtimeExtended = 1u << 1,  // letter L
  kRuleMaxFamilyJobs = 1u << 2,     // letter F
  kRuleMaxMachineJobs = 1u << 3,    // letter M
  kRulesAll = kRuleFlowtimeExtended | kRuleMaxFamilyJobs | kRuleMaxMachineJobs,
};

/// '_' -> none, 'L', 'F', 'M', 'A' per the naming scheme. Throws
/// std::invalid_argument on anything else.
unsigned rule_set_from_letter(char letter);
char rule_set_letter(unsigned rules);

enum class RuleOutcome { kNoChange, kTightened, kFail };

/// Integer bounds store over the relaxation variables of a partial
/// assignment: per machine the decided job multiset A_m, bounds on the
/// machine flow time, the machine job count, the per-(family, machine) job
/// count, and the global flow time. All tightenings are monotone; any
/// crossing of lb over ub marks the store failed. Holds a reference to the
/// instance, which must outlive every copy of the store.
class DomainStore {
 public:
  explicit DomainStore(const Instance& inst);

  const Instance& instance() const { return *inst_; }

  /// Strict upper bound on any reachable flow time, used as the +infinity
  /// sentinel so arithmetic stays integral.
  std::int64_t sentinel() const { return sentinel_; }

  bool failed() const { return failed_; }
  void mark_failed() { failed_ = true; }

  /// Records one more decided job of `family` on `machine` and lifts the
  /// count lower bounds it implies.
  void decide(int family, int machine);

  /// No further jobs on `machine`: caps its count upper bounds at the
  /// decided values.
  void close_machine(int machine);

  int decided_count(int family, int machine) const;
  int decided_total(int machine) const;
  /// Jobs of `family` not decided on any machine.
  int unassigned_count(int family) const;

  Bounds flowtime_machine(int machine) const;
  Bounds nb_jobs_machine(int machine) const;
  Bounds nb_jobs_family(int family, int machine) const;  // requires m in M_f
  Bounds flowtime_total() const;

  // Monotone tighteners; each fails the store when bounds cross.
  void tighten_flowtime_machine_lb(int machine, std::int64_t v);
  void tighten_flowtime_machine_ub(int machine, std::int64_t v);
  void tighten_nb_jobs_machine_lb(int machine, std::int64_t v);
  void tighten_nb_jobs_machine_ub(int machine, std::int64_t v);
  void tighten_nb_jobs_family_lb(int family, int machine, std::int64_t v);
  void tighten_nb_jobs_family_ub(int family, int machine, std::int64_t v);
  void tighten_flowtime_total_lb(std::int64_t v);
  void tighten_flowtime_total_ub(std::int64_t v);

  /// Decided jobs of `machine` as a relaxation multiset.
  std::vector<JobGroup> decided_groups(int machine) const;

  /// The first `count` globally unassigned jobs in shortest-processing-time
  /// order (ties by family id), as setup-free synthetic families (id offset
  /// by F). Clamped to the jobs actually available.
  std::vector<JobGroup> spt_extension(int count) const;

  /// Bounds-wise equality (decided sets and all bounds), for fixpoint tests.
  bool same_bounds(const DomainStore& other) const;

 private:
  const Instance* inst_;
  std::int64_t sentinel_ = 0;
  bool failed_ = false;
  std::vector<std::vector<int>> decided_;       // [m][f] counts, 0-based
  std::vector<int> decided_total_;              // per machine
  std::vector<Bounds> flowtime_machine_;
  std::vector<Bounds> nb_jobs_machine_;
  std::vector<std::vector<Bounds>> nb_jobs_family_;  // [m][f], qualified pairs only
  Bounds flowtime_total_;

  void tighten_lb(Bounds& b, std::int64_t v);
  void tighten_ub(Bounds& b, std::int64_t v);
};

/// Rule on flowtime_m from the decided jobs alone: lb(flowtime_m) raises to
/// FT*(A_m); fails when that exceeds ub(flowtime_m). No-op on empty A_m.
RuleOutcome rule_flowtime_assigned(DomainStore& store, int machine);

/// Stronger bound using lb(nbJobs_m): the decided jobs plus the missing
/// count taken from the unassigned jobs in SPT order with zero setup. Falls
/// back to the assigned-jobs bound when no extra jobs are required.
RuleOutcome rule_flowtime_extended(DomainStore& store, int machine);

/// Dichotomy on nbJobs_{f,m}: largest count k of family f on m such that
/// FT*(A_m with f raised to k) fits under ub(flowtime_m). Fails when even
/// the decided count does not fit.
RuleOutcome rule_max_family_jobs(DomainStore& store, int family, int machine);

/// Dichotomy on nbJobs_m: largest machine job count whose SPT zero-setup
/// completion of A_m fits under ub(flowtime_m).
RuleOutcome rule_max_machine_jobs(DomainStore& store, int machine);

/// One pass of the sum-consistency tightenings linking nbJobs_{f,m},
/// nbJobs_m, N and the flow time sum. Returns true when a bound changed.
bool sum_consistency_pass(DomainStore& store);

/// Runs sum consistency plus the enabled rules to fixpoint. Returns false
/// (store failed) when some bound becomes empty.
bool propagate(DomainStore& store, unsigned rules);

}  // namespace ptc
