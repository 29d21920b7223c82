#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptc/instance.hpp"

namespace ptc {

struct ScheduledJob {
  int family = 0;
  std::int64_t start = 0;
  std::int64_t completion = 0;

  bool operator==(const ScheduledJob&) const = default;
};

/// Concrete schedule: per machine, jobs in start order. machines[m-1] holds
/// machine m's jobs.
struct Schedule {
  std::vector<std::vector<ScheduledJob>> machines;

  /// Global horizon T: maximum completion over all machines, 0 when empty.
  std::int64_t horizon() const;

  bool operator==(const Schedule&) const = default;
};

/// Realizes per-machine family sequences with no inserted idle: every job
/// starts as early as machine availability and setup allow. The first job on
/// a machine pays no setup, nor does a job following one of its own family.
/// Throws std::invalid_argument when the sequences do not cover each family's
/// jobs exactly, or place a family on an unqualified machine.
Schedule left_pack(const Instance& inst, const std::vector<std::vector<int>>& sequences);

/// Sum of job completion times.
std::int64_t flowtime(const Schedule& s);

/// Reports overlap, setup, qualification-membership and qualification-timing
/// violations. Timing: on each machine, a family's first start must be at
/// most gamma and consecutive starts at most gamma apart (boundary equality
/// allowed). Empty list means the schedule is valid.
std::vector<std::string> check_validity(const Instance& inst, const Schedule& s);

struct Disqualification {
  int family = 0;
  int machine = 0;
  std::int64_t time = 0;  // moment the qualification is lost

  bool operator==(const Disqualification&) const = default;
};

struct DisqualificationReport {
  int count = 0;
  std::vector<Disqualification> losses;  // sorted by (family, machine)
};

/// Qualified pairs (f, m) lost by the horizon T: a pair with last f-start t
/// on m is lost iff T - t > gamma (loss at t + gamma); a pair that never ran
/// is lost iff T > gamma (loss at gamma). Boundary equality keeps the
/// qualification. Expects a valid schedule.
DisqualificationReport count_disqualifications(const Instance& inst, const Schedule& s);

/// JSON serialization; completions are derived from the instance on load.
std::string save_schedule(const Schedule& s);
Schedule load_schedule(const std::string& text, const Instance& inst);

}  // namespace ptc
