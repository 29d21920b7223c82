#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptc/instance.hpp"
#include "ptc/solver.hpp"

namespace ptc {

enum class RunStatus { kOpt, kSat, kUnk };

std::string to_string(RunStatus status);
RunStatus run_status_from_string(const std::string& text);

struct RunRecord {
  std::string instance;
  std::string algorithm;
  RunStatus status = RunStatus::kUnk;
  /// Absent when status is UNK, or when the instance was proven to have no
  /// valid schedule (reported as OPT with no_solution set).
  std::optional<ObjectivePair> objective;
  bool no_solution = false;
  double time_s = 0.0;
  std::int64_t nodes = 0;
  std::int64_t fails = 0;
};

/// One solver configuration under the 5-letter naming scheme
/// model / heuristic / rules / aggregation / priority, e.g. "N_ALF":
/// model fixed to N (native solver), H or _ for warm start, rule letter
/// (A, L, F, M or _), L or S for lexicographic vs weighted sum, priority
/// fixed to F (flow time first).
struct AlgorithmSpec {
  std::string label;
  SolverConfig config;
};

/// Parses a 5-letter label; throws std::invalid_argument on malformed or
/// unsupported letters. Time limit is left at the config default.
AlgorithmSpec algorithm_from_label(const std::string& label);
std::string label_for(const SolverConfig& config);

/// Runs every (instance, algorithm) pair. Instances are (id, instance)
/// pairs; per-instance failures become UNK records and the suite continues.
std::vector<RunRecord> run_suite(
    const std::vector<std::pair<std::string, Instance>>& instances,
    const std::vector<AlgorithmSpec>& algorithms, double time_limit_s);

struct BordaScore {
  std::string algorithm;
  /// Twice the Borda score: fractional ranks have denominator at most 2, so
  /// doubling keeps the arithmetic integral.
  std::int64_t twice_score = 0;
};

/// Ascending total fractional rank (lower is better). Per instance,
/// algorithms rank by status OPT < SAT < UNK, ties by objective pair
/// (records with an objective before records without), remaining ties
/// share the mean rank. Throws when some (instance, algorithm) pair is
/// missing.
std::vector<BordaScore> borda_ranking(const std::vector<RunRecord>& records);

/// cells[row][col]: row = status under A, col = status under B, in the
/// order OPT, SAT, UNK.
struct ContingencyTable {
  std::int64_t cells[3][3] = {};
  std::int64_t total() const;
};

/// Throws when the two label's instance sets differ.
ContingencyTable contingency(const std::vector<RunRecord>& records,
                             const std::string& label_a,
                             const std::string& label_b);

/// Header "instance,algorithm,status,flowtime,disq,time_s,nodes,fails".
/// Absent objectives serialize as empty fields; a proven-no-solution OPT
/// record writes NOSOL in both objective columns. Byte-deterministic for
/// equal records.
std::string records_to_csv(const std::vector<RunRecord>& records);
std::vector<RunRecord> records_from_csv(const std::string& text);

}  // namespace ptc
