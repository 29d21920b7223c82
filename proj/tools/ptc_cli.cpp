// Command-line front end: solve single instances, generate random ones, run
// benchmark suites and summarize their reports.
//
// Exit codes: 0 success, 1 usage error, 2 infeasible or unusable input,
// 3 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ptc/bench.hpp"
#include "ptc/instance.hpp"
#include "ptc/schedule.hpp"
#include "ptc/solver.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

ptc::Instance load_instance_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return ptc::load_instance(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad instance file " + path + ": " + e.what());
  }
}

unsigned rules_from_option(const std::string& rules) {
  if (rules == "none") return ptc::kNoRules;
  return ptc::rule_set_from_letter(rules[0]);
}

int run_solve(const std::string& instance_path, const std::string& rules,
              const std::string& agg, bool warm, double time_limit,
              const std::string& out_path) {
  ptc::Instance inst = load_instance_file(instance_path);
  ptc::SolverConfig cfg;
  cfg.rules = rules_from_option(rules);
  cfg.aggregation = agg == "sum" ? ptc::Aggregation::kWeightedSum
                                 : ptc::Aggregation::kLexicographic;
  cfg.warm_start = warm;
  cfg.time_limit_s = time_limit;

  ptc::SolveResult result = ptc::solve(inst, cfg);
  std::cout << "status: " << ptc::to_string(result.status) << "\n";
  if (result.objective) {
    std::cout << "flowtime: " << result.objective->flowtime << "\n";
    std::cout << "disqualified: " << result.objective->disqualified << "\n";
  }
  if (result.stats.warm_start_flowtime) {
    std::cout << "warm_start_flowtime: " << *result.stats.warm_start_flowtime
              << "\n";
  }
  std::cout << "nodes: " << result.stats.nodes << "\n";
  std::cout << "fails: " << result.stats.fails << "\n";
  std::cout << "time_s: " << std::fixed << std::setprecision(3)
            << result.stats.wall_s << "\n";

  if (!out_path.empty()) {
    if (result.schedule) {
      write_file(out_path, ptc::save_schedule(*result.schedule));
    } else {
      std::cerr << "no schedule to write\n";
    }
  }
  return result.status == ptc::SolveStatus::kInfeasible ? 2 : 0;
}

int run_generate(int jobs, int machines, int families, double density,
                 std::uint64_t seed, const std::string& out_path) {
  ptc::GenConfig cfg;
  cfg.jobs = jobs;
  cfg.machines = machines;
  cfg.families = families;
  cfg.density = density;
  cfg.seed = seed;
  ptc::Instance inst = ptc::generate_instance(cfg);
  const std::string text = ptc::save_instance(inst);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int run_bench(const std::string& dir, const std::string& configs_path,
              const std::string& out_path, double time_limit) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());

  std::vector<std::pair<std::string, ptc::Instance>> instances;
  for (const auto& path : paths) {
    try {
      instances.emplace_back(path.stem().string(),
                             load_instance_file(path.string()));
    } catch (const std::exception& e) {
      std::cerr << "skipping " << path.string() << ": " << e.what() << "\n";
    }
  }
  if (instances.empty()) {
    throw std::invalid_argument("no loadable instances in " + dir);
  }

  std::vector<ptc::AlgorithmSpec> algorithms;
  std::istringstream configs(read_file(configs_path));
  std::string line;
  while (std::getline(configs, line)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line[0] == '#') continue;
    algorithms.push_back(ptc::algorithm_from_label(line));
  }
  if (algorithms.empty()) {
    throw std::invalid_argument("no algorithm labels in " + configs_path);
  }

  auto records = ptc::run_suite(instances, algorithms, time_limit);
  write_file(out_path, ptc::records_to_csv(records));
  std::cout << "wrote " << records.size() << " records (" << instances.size()
            << " instances x " << algorithms.size() << " algorithms) to "
            << out_path << "\n";
  return 0;
}

int run_rank(const std::string& csv_path) {
  auto records = ptc::records_from_csv(read_file(csv_path));
  auto scores = ptc::borda_ranking(records);
  std::cout << "rank,algorithm,score\n";
  for (std::size_t i = 0; i < scores.size(); ++i) {
    std::ostringstream value;
    value << std::fixed << std::setprecision(1)
          << static_cast<double>(scores[i].twice_score) / 2.0;
    std::cout << i + 1 << "," << scores[i].algorithm << "," << value.str()
              << "\n";
  }
  return 0;
}

int run_contingency(const std::string& csv_path, const std::string& label_a,
                    const std::string& label_b) {
  auto records = ptc::records_from_csv(read_file(csv_path));
  ptc::ContingencyTable table = ptc::contingency(records, label_a, label_b);
  const char* names[3] = {"OPT", "SAT", "UNK"};
  std::cout << "rows: " << label_a << ", columns: " << label_b << "\n";
  std::cout << std::setw(8) << "";
  for (const char* name : names) std::cout << std::setw(8) << name;
  std::cout << "\n";
  for (int row = 0; row < 3; ++row) {
    std::cout << std::setw(8) << names[row];
    for (int col = 0; col < 3; ++col) {
      std::cout << std::setw(8) << table.cells[row][col];
    }
    std::cout << "\n";
  }
  std::cout << "total: " << table.total() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel-machine family scheduling with qualification "
               "thresholds"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  std::string instance_path;
  std::string rules = "A";
  std::string agg = "lex";
  std::string solve_out;
  bool warm = false;
  double time_limit = 300.0;
  solve_cmd->add_option("instance", instance_path, "Instance JSON file")
      ->required();
  solve_cmd->add_option("--rules", rules, "Filtering rules (default A)")
      ->check(CLI::IsMember({"none", "L", "F", "M", "A"}));
  solve_cmd->add_option("--agg", agg, "Objective aggregation (default lex)")
      ->check(CLI::IsMember({"lex", "sum"}));
  solve_cmd->add_flag("--warm", warm, "Start from the greedy heuristics");
  solve_cmd->add_option("--time-limit", time_limit,
                        "Time limit in seconds (default 300)");
  solve_cmd->add_option("--out", solve_out, "Write the schedule JSON here");

  auto* generate_cmd =
      app.add_subcommand("generate", "Generate a random instance");
  int gen_jobs = 0;
  int gen_machines = 0;
  int gen_families = 0;
  double gen_density = 0.8;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  generate_cmd->add_option("--n,--jobs", gen_jobs, "Number of jobs")
      ->required();
  generate_cmd->add_option("--m,--machines", gen_machines, "Number of machines")
      ->required();
  generate_cmd->add_option("--f,--families", gen_families, "Number of families")
      ->required();
  generate_cmd->add_option("--density", gen_density,
                           "Qualification density in (0, 1] (default 0.8)");
  generate_cmd->add_option("--seed", gen_seed, "Random seed (default 1)");
  generate_cmd->add_option("--out", gen_out,
                           "Output file (default: standard output)");

  auto* bench_cmd =
      app.add_subcommand("bench", "Run a suite of algorithms on a directory");
  std::string bench_dir;
  std::string bench_configs;
  std::string bench_out;
  double bench_time_limit = 300.0;
  bench_cmd->add_option("dir", bench_dir, "Directory of instance JSON files")
      ->required();
  bench_cmd->add_option("--configs", bench_configs,
                        "File with one algorithm label per line")
      ->required();
  bench_cmd->add_option("--out", bench_out, "Output CSV file")->required();
  bench_cmd->add_option("--time-limit", bench_time_limit,
                        "Per-run time limit in seconds (default 300)");

  auto* rank_cmd =
      app.add_subcommand("rank", "Borda ranking of a results CSV");
  std::string rank_csv;
  rank_cmd->add_option("results", rank_csv, "Results CSV file")->required();

  auto* contingency_cmd = app.add_subcommand(
      "contingency", "Status contingency table for two algorithms");
  std::string cont_csv;
  std::string cont_a;
  std::string cont_b;
  contingency_cmd->add_option("results", cont_csv, "Results CSV file")
      ->required();
  contingency_cmd->add_option("--a", cont_a, "Row algorithm label")
      ->required();
  contingency_cmd->add_option("--b", cont_b, "Column algorithm label")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) {
      return run_solve(instance_path, rules, agg, warm, time_limit, solve_out);
    }
    if (generate_cmd->parsed()) {
      return run_generate(gen_jobs, gen_machines, gen_families, gen_density,
                          gen_seed, gen_out);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_dir, bench_configs, bench_out, bench_time_limit);
    }
    if (rank_cmd->parsed()) {
      return run_rank(rank_csv);
    }
    if (contingency_cmd->parsed()) {
      return run_contingency(cont_csv, cont_a, cont_b);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
