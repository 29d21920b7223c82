#include "ptc/schedule.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace ptc {

namespace {

using json = nlohmann::ordered_json;

std::string loc(int machine, std::size_t pos) {
  return "machine " + std::to_string(machine) + ", job " + std::to_string(pos + 1);
}

}  // namespace

std::int64_t Schedule::horizon() const {
  std::int64_t t = 0;
  for (const auto& jobs : machines) {
    for (const auto& j : jobs) t = std::max(t, j.completion);
  }
  return t;
}

Schedule left_pack(const Instance& inst,
                   const std::vector<std::vector<int>>& sequences) {
  if (static_cast<int>(sequences.size()) != inst.machines) {
    throw std::invalid_argument("left_pack: one sequence per machine required");
  }
  std::vector<int> remaining(inst.families.size());
  for (std::size_t f = 0; f < inst.families.size(); ++f) {
    remaining[f] = inst.families[f].jobs;
  }

  Schedule s;
  s.machines.resize(sequences.size());
  for (int m = 1; m <= inst.machines; ++m) {
    std::int64_t t = 0;
    int prev = -1;
    for (int f : sequences[static_cast<std::size_t>(m - 1)]) {
      if (f < 1 || f > inst.family_count()) {
        throw std::invalid_argument("left_pack: unknown family " + std::to_string(f));
      }
      if (!inst.qualified(f, m)) {
        throw std::invalid_argument("left_pack: family " + std::to_string(f) +
                                    " is not qualified on machine " +
                                    std::to_string(m));
      }
      if (--remaining[static_cast<std::size_t>(f - 1)] < 0) {
        throw std::invalid_argument("left_pack: too many jobs of family " +
                                    std::to_string(f));
      }
      const Family& fam = inst.family(f);
      std::int64_t start = (prev >= 0 && prev != f) ? t + fam.setup : t;
      s.machines[static_cast<std::size_t>(m - 1)].push_back(
          {f, start, start + fam.proc});
      t = start + fam.proc;
      prev = f;
    }
  }
  for (std::size_t f = 0; f < remaining.size(); ++f) {
    if (remaining[f] != 0) {
      throw std::invalid_argument("left_pack: family " + std::to_string(f + 1) +
                                  " has unscheduled jobs");
    }
  }
  return s;
}

std::int64_t flowtime(const Schedule& s) {
  std::int64_t total = 0;
  for (const auto& jobs : s.machines) {
    for (const auto& j : jobs) total += j.completion;
  }
  return total;
}

std::vector<std::string> check_validity(const Instance& inst, const Schedule& s) {
  std::vector<std::string> out;
  if (static_cast<int>(s.machines.size()) != inst.machines) {
    out.push_back("schedule must list every machine exactly once");
    return out;
  }

  std::vector<int> counted(inst.families.size(), 0);
  for (int m = 1; m <= inst.machines; ++m) {
    const auto& jobs = s.machines[static_cast<std::size_t>(m - 1)];
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      const auto& j = jobs[k];
      if (j.family < 1 || j.family > inst.family_count()) {
        out.push_back(loc(m, k) + ": unknown family " + std::to_string(j.family));
        continue;
      }
      counted[static_cast<std::size_t>(j.family - 1)] += 1;
      const Family& fam = inst.family(j.family);
      if (j.start < 0) out.push_back(loc(m, k) + ": negative start");
      if (j.completion - j.start != fam.proc) {
        out.push_back(loc(m, k) + ": duration must equal the processing time");
      }
      if (!inst.qualified(j.family, m)) {
        out.push_back(loc(m, k) + ": family " + std::to_string(j.family) +
                      " not qualified here");
      }
      if (k > 0) {
        const auto& prev = jobs[k - 1];
        if (j.start < prev.completion) {
          out.push_back(loc(m, k) + ": overlaps the previous job");
        } else if (prev.family != j.family &&
                   j.start < prev.completion + fam.setup) {
          out.push_back(loc(m, k) + ": setup time not respected");
        }
      }
    }
  }
  for (std::size_t f = 0; f < counted.size(); ++f) {
    if (counted[f] != inst.families[f].jobs) {
      out.push_back("family " + std::to_string(f + 1) + ": scheduled " +
                    std::to_string(counted[f]) + " of " +
                    std::to_string(inst.families[f].jobs) + " jobs");
    }
  }

  // Start-to-start qualification timing per (family, machine).
  for (const Family& fam : inst.families) {
    for (int m : fam.qualified) {
      std::vector<std::int64_t> starts;
      for (const auto& j : s.machines[static_cast<std::size_t>(m - 1)]) {
        if (j.family == fam.id) starts.push_back(j.start);
      }
      std::sort(starts.begin(), starts.end());
      if (starts.empty()) continue;
      if (starts.front() > fam.gamma) {
        out.push_back("family " + std::to_string(fam.id) + " on machine " +
                      std::to_string(m) + ": first start " +
                      std::to_string(starts.front()) +
                      " exceeds the threshold " + std::to_string(fam.gamma));
      }
      for (std::size_t k = 1; k < starts.size(); ++k) {
        if (starts[k] - starts[k - 1] > fam.gamma) {
          out.push_back("family " + std::to_string(fam.id) + " on machine " +
                        std::to_string(m) + ": start gap " +
                        std::to_string(starts[k] - starts[k - 1]) +
                        " exceeds the threshold " + std::to_string(fam.gamma));
        }
      }
    }
  }
  return out;
}

DisqualificationReport count_disqualifications(const Instance& inst,
                                               const Schedule& s) {
  DisqualificationReport report;
  std::int64_t horizon = s.horizon();
  for (const Family& fam : inst.families) {
    for (int m : fam.qualified) {
      std::int64_t last = -1;
      if (m >= 1 && m <= static_cast<int>(s.machines.size())) {
        for (const auto& j : s.machines[static_cast<std::size_t>(m - 1)]) {
          if (j.family == fam.id) last = std::max(last, j.start);
        }
      }
      if (last < 0) {
        if (horizon > fam.gamma) report.losses.push_back({fam.id, m, fam.gamma});
      } else if (horizon - last > fam.gamma) {
        report.losses.push_back({fam.id, m, last + fam.gamma});
      }
    }
  }
  std::sort(report.losses.begin(), report.losses.end(),
            [](const Disqualification& a, const Disqualification& b) {
              return a.family != b.family ? a.family < b.family
                                          : a.machine < b.machine;
            });
  report.count = static_cast<int>(report.losses.size());
  return report;
}

std::string save_schedule(const Schedule& s) {
  json doc;
  doc["machines"] = json::array();
  for (std::size_t m = 0; m < s.machines.size(); ++m) {
    json entry;
    entry["id"] = static_cast<int>(m + 1);
    entry["jobs"] = json::array();
    for (const auto& j : s.machines[m]) {
      json job;
      job["family"] = j.family;
      job["start"] = j.start;
      entry["jobs"].push_back(std::move(job));
    }
    doc["machines"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

Schedule load_schedule(const std::string& text, const Instance& inst) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("schedule: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("machines") || doc.size() != 1 ||
      !doc["machines"].is_array()) {
    throw std::invalid_argument("schedule: top level must be {\"machines\": [...]}");
  }

  Schedule s;
  s.machines.resize(static_cast<std::size_t>(inst.machines));
  std::vector<bool> seen(static_cast<std::size_t>(inst.machines), false);
  for (const json& entry : doc["machines"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry.contains("jobs") ||
        entry.size() != 2 || !entry["id"].is_number_integer() ||
        !entry["jobs"].is_array()) {
      throw std::invalid_argument("schedule: machine entries need 'id' and 'jobs'");
    }
    int id = entry["id"].get<int>();
    if (id < 1 || id > inst.machines) {
      throw std::invalid_argument("schedule: machine id " + std::to_string(id) +
                                  " outside 1.." + std::to_string(inst.machines));
    }
    if (seen[static_cast<std::size_t>(id - 1)]) {
      throw std::invalid_argument("schedule: duplicate machine id " +
                                  std::to_string(id));
    }
    seen[static_cast<std::size_t>(id - 1)] = true;
    auto& jobs = s.machines[static_cast<std::size_t>(id - 1)];
    for (const json& job : entry["jobs"]) {
      if (!job.is_object() || !job.contains("family") || !job.contains("start") ||
          job.size() != 2 || !job["family"].is_number_integer() ||
          !job["start"].is_number_integer()) {
        throw std::invalid_argument("schedule: jobs need 'family' and 'start'");
      }
      int f = job["family"].get<int>();
      if (f < 1 || f > inst.family_count()) {
        throw std::invalid_argument("schedule: unknown family " + std::to_string(f));
      }
      std::int64_t start = job["start"].get<std::int64_t>();
      jobs.push_back({f, start, start + inst.family(f).proc});
    }
    std::sort(jobs.begin(), jobs.end(),
              [](const ScheduledJob& a, const ScheduledJob& b) {
                return a.start != b.start ? a.start < b.start
                                          : a.family < b.family;
              });
  }
  return s;
}

}  // namespace ptc
