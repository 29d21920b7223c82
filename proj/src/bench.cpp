#include "ptc/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace ptc {

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kOpt: return "OPT";
    case RunStatus::kSat: return "SAT";
    case RunStatus::kUnk: return "UNK";
  }
  return "UNK";
}

RunStatus run_status_from_string(const std::string& text) {
  if (text == "OPT") return RunStatus::kOpt;
  if (text == "SAT") return RunStatus::kSat;
  if (text == "UNK") return RunStatus::kUnk;
  throw std::invalid_argument("unknown run status: " + text);
}

AlgorithmSpec algorithm_from_label(const std::string& label) {
  if (label.size() != 5) {
    throw std::invalid_argument("algorithm label needs 5 letters: " + label);
  }
  if (label[0] != 'N') {
    throw std::invalid_argument("unsupported model letter in: " + label);
  }
  AlgorithmSpec spec;
  spec.label = label;
  if (label[1] == 'H') {
    spec.config.warm_start = true;
  } else if (label[1] != '_') {
    throw std::invalid_argument("unsupported heuristic letter in: " + label);
  }
  spec.config.rules = rule_set_from_letter(label[2]);
  if (label[3] == 'S') {
    spec.config.aggregation = Aggregation::kWeightedSum;
  } else if (label[3] != 'L') {
    throw std::invalid_argument("unsupported aggregation letter in: " + label);
  }
  if (label[4] != 'F') {
    throw std::invalid_argument("unsupported priority letter in: " + label);
  }
  return spec;
}

std::string label_for(const SolverConfig& config) {
  std::string label = "N";
  label += config.warm_start ? 'H' : '_';
  label += rule_set_letter(config.rules);
  label += config.aggregation == Aggregation::kWeightedSum ? 'S' : 'L';
  label += 'F';
  return label;
}

std::vector<RunRecord> run_suite(
    const std::vector<std::pair<std::string, Instance>>& instances,
    const std::vector<AlgorithmSpec>& algorithms, double time_limit_s) {
  std::vector<RunRecord> records;
  records.reserve(instances.size() * algorithms.size());
  for (const auto& [name, inst] : instances) {
    for (const AlgorithmSpec& algo : algorithms) {
      RunRecord record;
      record.instance = name;
      record.algorithm = algo.label;
      try {
        SolverConfig cfg = algo.config;
        cfg.time_limit_s = time_limit_s;
        SolveResult result = solve(inst, cfg);
        record.time_s = result.stats.wall_s;
        record.nodes = result.stats.nodes;
        record.fails = result.stats.fails;
        record.objective = result.objective;
        switch (result.status) {
          case SolveStatus::kOptimal:
            record.status = RunStatus::kOpt;
            break;
          case SolveStatus::kSatisfiable:
            record.status = RunStatus::kSat;
            break;
          case SolveStatus::kUnknown:
            record.status = RunStatus::kUnk;
            break;
          case SolveStatus::kInfeasible:
            record.status = RunStatus::kOpt;
            record.no_solution = true;
            break;
        }
      } catch (const std::exception&) {
        record.status = RunStatus::kUnk;
        record.objective.reset();
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

namespace {

int status_index(RunStatus status) {
  switch (status) {
    case RunStatus::kOpt: return 0;
    case RunStatus::kSat: return 1;
    case RunStatus::kUnk: return 2;
  }
  return 2;
}

// Better-first strict weak order on records of one instance.
struct RankKey {
  int status;
  int missing_objective;
  std::int64_t flowtime;
  std::int64_t disqualified;

  friend auto operator<=>(const RankKey&, const RankKey&) = default;
};

RankKey rank_key(const RunRecord& r) {
  if (r.objective) {
    return RankKey{status_index(r.status), 0, r.objective->flowtime,
                   r.objective->disqualified};
  }
  return RankKey{status_index(r.status), 1, 0, 0};
}

}  // namespace

std::vector<BordaScore> borda_ranking(const std::vector<RunRecord>& records) {
  std::set<std::string> algorithms;
  std::vector<std::string> instance_order;
  std::map<std::string, std::vector<const RunRecord*>> by_instance;
  std::map<std::pair<std::string, std::string>, int> seen;
  for (const RunRecord& r : records) {
    algorithms.insert(r.algorithm);
    auto [it, fresh] = by_instance.try_emplace(r.instance);
    if (fresh) instance_order.push_back(r.instance);
    it->second.push_back(&r);
    ++seen[{r.instance, r.algorithm}];
  }
  for (const auto& [pair, count] : seen) {
    if (count != 1) {
      throw std::invalid_argument("duplicate record for " + pair.first + "/" +
                                  pair.second);
    }
  }
  if (records.size() != algorithms.size() * by_instance.size()) {
    throw std::invalid_argument(
        "borda ranking needs every algorithm on every instance");
  }

  std::map<std::string, std::int64_t> twice;
  for (const std::string& algo : algorithms) twice[algo] = 0;
  for (const std::string& inst : instance_order) {
    std::vector<const RunRecord*>& group = by_instance[inst];
    std::sort(group.begin(), group.end(),
              [](const RunRecord* a, const RunRecord* b) {
                return rank_key(*a) < rank_key(*b);
              });
    std::size_t i = 0;
    while (i < group.size()) {
      std::size_t j = i + 1;
      while (j < group.size() && rank_key(*group[j]) == rank_key(*group[i])) {
        ++j;
      }
      // Positions i..j-1 hold ranks i+1..j; twice the mean is i + j + 1.
      const std::int64_t twice_mean = static_cast<std::int64_t>(i + j + 1);
      for (std::size_t p = i; p < j; ++p) {
        twice[group[p]->algorithm] += twice_mean;
      }
      i = j;
    }
  }

  std::vector<BordaScore> scores;
  scores.reserve(twice.size());
  for (const auto& [algo, value] : twice) {
    scores.push_back(BordaScore{algo, value});
  }
  std::sort(scores.begin(), scores.end(),
            [](const BordaScore& a, const BordaScore& b) {
              return a.twice_score != b.twice_score
                         ? a.twice_score < b.twice_score
                         : a.algorithm < b.algorithm;
            });
  return scores;
}

std::int64_t ContingencyTable::total() const {
  std::int64_t sum = 0;
  for (const auto& row : cells) {
    for (std::int64_t cell : row) sum += cell;
  }
  return sum;
}

ContingencyTable contingency(const std::vector<RunRecord>& records,
                             const std::string& label_a,
                             const std::string& label_b) {
  std::map<std::string, RunStatus> a;
  std::map<std::string, RunStatus> b;
  for (const RunRecord& r : records) {
    if (r.algorithm == label_a && !a.emplace(r.instance, r.status).second) {
      throw std::invalid_argument("duplicate record for " + r.instance + "/" +
                                  label_a);
    }
    if (r.algorithm == label_b && !b.emplace(r.instance, r.status).second) {
      throw std::invalid_argument("duplicate record for " + r.instance + "/" +
                                  label_b);
    }
  }
  if (a.size() != b.size()) {
    throw std::invalid_argument("contingency instance sets differ");
  }
  ContingencyTable table;
  for (const auto& [inst, status_a] : a) {
    auto it = b.find(inst);
    if (it == b.end()) {
      throw std::invalid_argument("contingency instance sets differ");
    }
    ++table.cells[status_index(status_a)][status_index(it->second)];
  }
  return table;
}

namespace {

const char kCsvHeader[] =
    "instance,algorithm,status,flowtime,disq,time_s,nodes,fails";

const std::string& checked_field(const std::string& field) {
  if (field.find_first_of(",\r\n") != std::string::npos) {
    throw std::invalid_argument("csv field contains a separator: " + field);
  }
  return field;
}

std::int64_t parse_int(const std::string& text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("expected an integer, got: " + text);
  }
  return value;
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("expected a number, got: " + text);
  }
  return value;
}

}  // namespace

std::string records_to_csv(const std::vector<RunRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  char time_buf[64];
  for (const RunRecord& r : records) {
    std::string flowtime_field;
    std::string disq_field;
    if (r.no_solution) {
      flowtime_field = "NOSOL";
      disq_field = "NOSOL";
    } else if (r.objective) {
      flowtime_field = std::to_string(r.objective->flowtime);
      disq_field = std::to_string(r.objective->disqualified);
    }
    std::snprintf(time_buf, sizeof time_buf, "%.6f", r.time_s);
    out += checked_field(r.instance);
    out += ',';
    out += checked_field(r.algorithm);
    out += ',';
    out += to_string(r.status);
    out += ',';
    out += flowtime_field;
    out += ',';
    out += disq_field;
    out += ',';
    out += time_buf;
    out += ',';
    out += std::to_string(r.nodes);
    out += ',';
    out += std::to_string(r.fails);
    out += '\n';
  }
  return out;
}

std::vector<RunRecord> records_from_csv(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  if (lines.empty() || lines[0] != kCsvHeader) {
    throw std::invalid_argument("missing csv header");
  }

  std::vector<RunRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : lines[i]) {
      if (c == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    if (fields.size() != 8) {
      throw std::invalid_argument("csv row needs 8 fields: " + lines[i]);
    }
    RunRecord r;
    r.instance = fields[0];
    r.algorithm = fields[1];
    r.status = run_status_from_string(fields[2]);
    if (fields[3] == "NOSOL" && fields[4] == "NOSOL") {
      r.no_solution = true;
    } else if (!fields[3].empty() || !fields[4].empty()) {
      r.objective = ObjectivePair{parse_int(fields[3]), parse_int(fields[4])};
    }
    r.time_s = parse_double(fields[5]);
    r.nodes = parse_int(fields[6]);
    r.fails = parse_int(fields[7]);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace ptc
