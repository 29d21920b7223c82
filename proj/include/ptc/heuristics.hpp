#pragma once

#include <optional>

#include "ptc/instance.hpp"
#include "ptc/schedule.hpp"

namespace ptc {

/// Greedy list scheduler focused on flow time: repeatedly places one job of
/// the family whose cheapest placement increases the completion time least
/// (ties: smaller family id, then smaller machine id). May violate a time
/// threshold on tight instances, in which case nullopt is returned.
std::optional<Schedule> scheduling_centric(const Instance& inst);

/// Greedy scheduler focused on keeping qualifications: repeatedly serves
/// the earliest-available machine that can still take a job, picking the
/// family whose qualification deadline (last start + gamma) on it is most
/// urgent. Returns nullopt when the instance defeats the greedy choice.
std::optional<Schedule> qualification_centric(const Instance& inst);

}  // namespace ptc
