#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptc {

/// A family groups identical jobs: one processing time, one setup time, one
/// qualification threshold and one set of machines allowed to run them.
/// Ids are 1-based and contiguous.
struct Family {
  int id = 0;
  int jobs = 0;             // n_f, number of jobs in the family
  std::int64_t proc = 0;    // processing time of each job
  std::int64_t setup = 0;   // setup paid when the previous job is of another family
  std::int64_t gamma = 0;   // start-to-start qualification threshold
  std::vector<int> qualified;  // machine ids allowed to run the family, sorted

  bool operator==(const Family&) const = default;
};

struct Instance {
  int machines = 0;
  std::vector<Family> families;

  int total_jobs() const;    // sum of family sizes
  int family_count() const;
  const Family& family(int id) const;
  bool qualified(int family_id, int machine_id) const;

  bool operator==(const Instance&) const = default;
};

/// Parameters for random instance generation. Ranges are inclusive.
struct GenConfig {
  int jobs = 0;
  int machines = 0;
  int families = 0;
  std::int64_t proc_min = 1;
  std::int64_t proc_max = 10;
  std::int64_t setup_min = 0;
  std::int64_t setup_max = 5;
  std::int64_t gamma_min = 10;
  std::int64_t gamma_max = 50;
  double density = 0.8;    // probability a machine is qualified, in (0, 1]
  std::uint64_t seed = 1;
};

/// Returns every violated invariant with a family/machine locator in the
/// message; an empty list means the instance is valid.
std::vector<std::string> validate_instance(const Instance& inst);

/// Setup matrix S indexed [from-1][to-1]: 0 on the diagonal, setup of the
/// target family elsewhere (sequence-independent in the first index).
std::vector<std::vector<std::int64_t>> setup_matrix(const Instance& inst);

/// Parses the JSON instance format. Throws std::invalid_argument with a
/// field locator on malformed input, unknown keys, or validation failure.
Instance load_instance(const std::string& text);

/// Canonical JSON serialization; load_instance(save_instance(i)) == i.
std::string save_instance(const Instance& inst);

/// Deterministic random instance for a config. Retries with derived seeds
/// until the qualification-centric heuristic finds a feasible schedule.
/// Throws std::invalid_argument on infeasible configs (e.g. F > N).
Instance generate_instance(const GenConfig& cfg);

}  // namespace ptc
