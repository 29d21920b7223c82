#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ptc/filtering.hpp"
#include "ptc/instance.hpp"
#include "ptc/schedule.hpp"

namespace ptc {

enum class Aggregation { kLexicographic, kWeightedSum };

enum class SolveStatus { kOptimal, kSatisfiable, kUnknown, kInfeasible };

std::string to_string(SolveStatus status);

struct SolverConfig {
  unsigned rules = kRulesAll;
  Aggregation aggregation = Aggregation::kLexicographic;
  double time_limit_s = 300.0;
  bool warm_start = false;
  std::int64_t node_limit = 0;  // 0 = unlimited
  /// When set, called with every node store that survives propagation (used
  /// by the test harness to inspect filtering strength). Never needed for
  /// solving.
  std::function<void(const DomainStore&)>* store_observer = nullptr;
};

struct ObjectivePair {
  std::int64_t flowtime = 0;
  std::int64_t disqualified = 0;

  friend bool operator==(const ObjectivePair&, const ObjectivePair&) = default;
  friend auto operator<=>(const ObjectivePair&, const ObjectivePair&) = default;
};

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t fails = 0;
  double wall_s = 0.0;
  std::optional<std::int64_t> warm_start_flowtime;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<ObjectivePair> objective;
  std::optional<Schedule> schedule;
  SolveStats stats;
};

/// Minimizes (flow time, disqualified pairs) lexicographically by two
/// branch-and-bound phases: phase one proves the minimum flow time, phase
/// two minimizes lost qualifications among the schedules attaining it.
SolveResult solve_lex(const Instance& inst, const SolverConfig& cfg = {});

/// Minimizes W * flowtime + disqualified in a single phase, with
/// W = 1 + sum_f |M_f| so the flow time always dominates. Agrees with
/// solve_lex on the optimum.
SolveResult solve_weighted(const Instance& inst, const SolverConfig& cfg = {});

/// Dispatches on cfg.aggregation.
SolveResult solve(const Instance& inst, const SolverConfig& cfg = {});

/// Root lower bound on the total flow time under the given rule set.
std::int64_t flowtime_lower_bound(const Instance& inst, unsigned rules);

/// Exhaustive reference: enumerates every per-machine job sequence,
/// left-packed (any flow-time-optimal schedule is left-packed, so this loses
/// nothing). Returns the lexicographic optimum, or nullopt when no valid
/// schedule exists. Only sensible for tiny instances; refuses jobs > job_cap.
std::optional<ObjectivePair> brute_force_solve(const Instance& inst,
                                               int job_cap = 8);

}  // namespace ptc
