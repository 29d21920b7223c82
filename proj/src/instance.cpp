#include "ptc/instance.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "ptc/heuristics.hpp"

namespace ptc {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Inclusive range draw via modulo: identical on every platform, unlike the
// distribution classes.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  for (const char* key : keys) {
    if (!obj.contains(key)) {
      throw std::invalid_argument("instance: missing key '" + std::string(key) +
                                  "' in " + where);
    }
  }
  for (const auto& item : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
          return item.key() == k;
        }) == keys.end()) {
      throw std::invalid_argument("instance: unknown key '" + item.key() +
                                  "' in " + where);
    }
  }
}

}  // namespace

int Instance::total_jobs() const {
  int total = 0;
  for (const Family& f : families) total += f.jobs;
  return total;
}

int Instance::family_count() const { return static_cast<int>(families.size()); }

const Family& Instance::family(int id) const {
  return families.at(static_cast<std::size_t>(id - 1));
}

bool Instance::qualified(int family_id, int machine_id) const {
  const auto& q = family(family_id).qualified;
  return std::binary_search(q.begin(), q.end(), machine_id);
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.machines < 1) out.push_back("machine count must be >= 1");
  for (std::size_t i = 0; i < inst.families.size(); ++i) {
    const Family& f = inst.families[i];
    std::string tag = "family " + std::to_string(f.id);
    if (f.id != static_cast<int>(i) + 1) {
      out.push_back(tag + ": ids must be 1..F in order (expected " +
                    std::to_string(i + 1) + ")");
      continue;
    }
    if (f.jobs < 1) out.push_back(tag + ": job count must be >= 1");
    if (f.proc < 1) out.push_back(tag + ": processing time must be >= 1");
    if (f.setup < 0) out.push_back(tag + ": setup time must be >= 0");
    if (f.gamma < 1) out.push_back(tag + ": threshold must be >= 1");
    if (f.qualified.empty()) {
      out.push_back(tag + ": qualified machine set is empty");
    } else if (!std::is_sorted(f.qualified.begin(), f.qualified.end()) ||
               std::adjacent_find(f.qualified.begin(), f.qualified.end()) !=
                   f.qualified.end()) {
      out.push_back(tag + ": qualified machines must be sorted and distinct");
    } else if (f.qualified.front() < 1 || f.qualified.back() > inst.machines) {
      out.push_back(tag + ": qualified machine outside 1.." +
                    std::to_string(inst.machines));
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> setup_matrix(const Instance& inst) {
  std::size_t n = inst.families.size();
  std::vector<std::vector<std::int64_t>> s(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (from != to) s[from][to] = inst.families[to].setup;
    }
  }
  return s;
}

Instance load_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("instance: top level must be an object");
  }
  require_keys(doc, {"machines", "families"}, "top level");
  if (!doc["machines"].is_number_integer() || !doc["families"].is_array()) {
    throw std::invalid_argument("instance: 'machines' must be an integer and "
                                "'families' an array");
  }

  Instance inst;
  inst.machines = doc["machines"].get<int>();
  int index = 0;
  for (const json& fam : doc["families"]) {
    ++index;
    std::string where = "families[" + std::to_string(index - 1) + "]";
    if (!fam.is_object()) {
      throw std::invalid_argument("instance: " + where + " must be an object");
    }
    require_keys(fam, {"id", "jobs", "proc", "setup", "gamma", "qualified"}, where);
    for (const char* key : {"id", "jobs", "proc", "setup", "gamma"}) {
      if (!fam[key].is_number_integer()) {
        throw std::invalid_argument("instance: " + where + "." + key +
                                    " must be an integer");
      }
    }
    if (!fam["qualified"].is_array()) {
      throw std::invalid_argument("instance: " + where + ".qualified must be an array");
    }
    Family f;
    f.id = fam["id"].get<int>();
    f.jobs = fam["jobs"].get<int>();
    f.proc = fam["proc"].get<std::int64_t>();
    f.setup = fam["setup"].get<std::int64_t>();
    f.gamma = fam["gamma"].get<std::int64_t>();
    for (const json& m : fam["qualified"]) {
      if (!m.is_number_integer()) {
        throw std::invalid_argument("instance: " + where +
                                    ".qualified entries must be integers");
      }
      f.qualified.push_back(m.get<int>());
    }
    std::sort(f.qualified.begin(), f.qualified.end());
    if (std::adjacent_find(f.qualified.begin(), f.qualified.end()) !=
        f.qualified.end()) {
      throw std::invalid_argument("instance: " + where +
                                  ".qualified has duplicate machines");
    }
    inst.families.push_back(std::move(f));
  }

  auto violations = validate_instance(inst);
  if (!violations.empty()) {
    throw std::invalid_argument("instance: " + violations.front());
  }
  return inst;
}

std::string save_instance(const Instance& inst) {
  json doc;
  doc["machines"] = inst.machines;
  doc["families"] = json::array();
  for (const Family& f : inst.families) {
    json fam;
    fam["id"] = f.id;
    fam["jobs"] = f.jobs;
    fam["proc"] = f.proc;
    fam["setup"] = f.setup;
    fam["gamma"] = f.gamma;
    fam["qualified"] = f.qualified;
    doc["families"].push_back(std::move(fam));
  }
  return doc.dump(2) + "\n";
}

Instance generate_instance(const GenConfig& cfg) {
  if (cfg.jobs < 1 || cfg.machines < 1 || cfg.families < 1) {
    throw std::invalid_argument("generate: jobs, machines and families must be >= 1");
  }
  if (cfg.families > cfg.jobs) {
    throw std::invalid_argument("generate: more families than jobs");
  }
  if (cfg.proc_min < 1 || cfg.proc_max < cfg.proc_min || cfg.setup_min < 0 ||
      cfg.setup_max < cfg.setup_min || cfg.gamma_min < 1 ||
      cfg.gamma_max < cfg.gamma_min) {
    throw std::invalid_argument("generate: malformed parameter ranges");
  }
  if (!(cfg.density > 0.0) || cfg.density > 1.0) {
    throw std::invalid_argument("generate: density must be in (0, 1]");
  }

  // Probability as an integer threshold so the draw stays platform-exact.
  auto density_cut = static_cast<std::uint64_t>(cfg.density * 1000000.0);
  std::uint64_t seed_state = cfg.seed;
  std::uint64_t seed = cfg.seed;

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(seed);

    std::vector<int> counts(static_cast<std::size_t>(cfg.families), 1);
    for (int extra = cfg.jobs - cfg.families; extra > 0; --extra) {
      counts[rng() % counts.size()] += 1;
    }

    Instance inst;
    inst.machines = cfg.machines;
    for (int f = 0; f < cfg.families; ++f) {
      Family fam;
      fam.id = f + 1;
      fam.jobs = counts[static_cast<std::size_t>(f)];
      fam.proc = draw(rng, cfg.proc_min, cfg.proc_max);
      fam.setup = draw(rng, cfg.setup_min, cfg.setup_max);
      fam.gamma = draw(rng, cfg.gamma_min, cfg.gamma_max);
      for (int m = 1; m <= cfg.machines; ++m) {
        if (rng() % 1000000 < density_cut) fam.qualified.push_back(m);
      }
      if (fam.qualified.empty()) {
        fam.qualified.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                        cfg.machines)));
      }
      inst.families.push_back(std::move(fam));
    }

    if (qualification_centric(inst).has_value()) return inst;
    seed = splitmix64(seed_state);
  }
  throw std::runtime_error("generate: no feasible instance after 64 seeds");
}

}  // namespace ptc
