// bindings/module.cpp: pybind11 module ptcsched._core. Exposes the main
// operations: instance I/O and generation, schedule evaluation, the
// single-machine relaxation, both greedy heuristics, the exact solver and
// the benchmark helpers. Everything crosses the boundary by value.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "ptc/bench.hpp"
#include "ptc/heuristics.hpp"
#include "ptc/instance.hpp"
#include "ptc/relaxation.hpp"
#include "ptc/schedule.hpp"
#include "ptc/solver.hpp"

namespace py = pybind11;
using namespace ptc;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact solver for scheduling job families on parallel machines with "
      "sequence-independent setups and qualification time thresholds, "
      "minimizing (flow time, lost qualifications) lexicographically.";

  // --- instance ---
  py::class_<Family>(m, "Family")
      .def(py::init<>())
      .def(py::init([](int id, int jobs, std::int64_t proc, std::int64_t setup,
                       std::int64_t gamma, std::vector<int> qualified) {
             return Family{id, jobs, proc, setup, gamma, std::move(qualified)};
           }),
           py::arg("id"), py::arg("jobs"), py::arg("proc"), py::arg("setup"),
           py::arg("gamma"), py::arg("qualified"))
      .def_readwrite("id", &Family::id)
      .def_readwrite("jobs", &Family::jobs)
      .def_readwrite("proc", &Family::proc)
      .def_readwrite("setup", &Family::setup)
      .def_readwrite("gamma", &Family::gamma)
      .def_readwrite("qualified", &Family::qualified)
      .def(py::self == py::self)
      .def("__repr__", [](const Family& f) {
        return "Family(id=" + std::to_string(f.id) +
               ", jobs=" + std::to_string(f.jobs) +
               ", proc=" + std::to_string(f.proc) +
               ", setup=" + std::to_string(f.setup) +
               ", gamma=" + std::to_string(f.gamma) + ")";
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init<>())
      .def(py::init([](int machines, std::vector<Family> families) {
             return Instance{machines, std::move(families)};
           }),
           py::arg("machines"), py::arg("families"))
      .def_readwrite("machines", &Instance::machines)
      .def_readwrite("families", &Instance::families)
      .def("total_jobs", &Instance::total_jobs)
      .def("family_count", &Instance::family_count)
      .def("qualified", &Instance::qualified, py::arg("family_id"),
           py::arg("machine_id"))
      .def(py::self == py::self)
      .def("__repr__", [](const Instance& inst) {
        return "Instance(machines=" + std::to_string(inst.machines) +
               ", families=" + std::to_string(inst.family_count()) +
               ", jobs=" + std::to_string(inst.total_jobs()) + ")";
      });

  py::class_<GenConfig>(m, "GenConfig")
      .def(py::init<>())
      .def_readwrite("jobs", &GenConfig::jobs)
      .def_readwrite("machines", &GenConfig::machines)
      .def_readwrite("families", &GenConfig::families)
      .def_readwrite("proc_min", &GenConfig::proc_min)
      .def_readwrite("proc_max", &GenConfig::proc_max)
      .def_readwrite("setup_min", &GenConfig::setup_min)
      .def_readwrite("setup_max", &GenConfig::setup_max)
      .def_readwrite("gamma_min", &GenConfig::gamma_min)
      .def_readwrite("gamma_max", &GenConfig::gamma_max)
      .def_readwrite("density", &GenConfig::density)
      .def_readwrite("seed", &GenConfig::seed);

  m.def("validate_instance", &validate_instance, py::arg("instance"),
        "Every violated invariant as a message; empty when well formed.");
  m.def("load_instance", &load_instance, py::arg("text"),
        "Parses the JSON instance format; raises on malformed input.");
  m.def("save_instance", &save_instance, py::arg("instance"));
  m.def("generate_instance", &generate_instance, py::arg("config"),
        "Deterministic random instance for the given config and seed.");

  // --- schedule ---
  py::class_<ScheduledJob>(m, "ScheduledJob")
      .def(py::init<>())
      .def_readwrite("family", &ScheduledJob::family)
      .def_readwrite("start", &ScheduledJob::start)
      .def_readwrite("completion", &ScheduledJob::completion)
      .def(py::self == py::self)
      .def("__repr__", [](const ScheduledJob& j) {
        return "ScheduledJob(family=" + std::to_string(j.family) +
               ", start=" + std::to_string(j.start) +
               ", completion=" + std::to_string(j.completion) + ")";
      });

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def_readwrite("machines", &Schedule::machines)
      .def("horizon", &Schedule::horizon)
      .def(py::self == py::self);

  py::class_<Disqualification>(m, "Disqualification")
      .def_readonly("family", &Disqualification::family)
      .def_readonly("machine", &Disqualification::machine)
      .def_readonly("time", &Disqualification::time)
      .def("__repr__", [](const Disqualification& d) {
        return "Disqualification(family=" + std::to_string(d.family) +
               ", machine=" + std::to_string(d.machine) +
               ", time=" + std::to_string(d.time) + ")";
      });

  py::class_<DisqualificationReport>(m, "DisqualificationReport")
      .def_readonly("count", &DisqualificationReport::count)
      .def_readonly("losses", &DisqualificationReport::losses);

  m.def("left_pack", &left_pack, py::arg("instance"), py::arg("sequences"),
        "Realizes per-machine family sequences with no inserted idle time.");
  m.def("flowtime", &flowtime, py::arg("schedule"));
  m.def("check_validity", &check_validity, py::arg("instance"),
        py::arg("schedule"),
        "Every violated scheduling constraint; empty when valid.");
  m.def("count_disqualifications", &count_disqualifications,
        py::arg("instance"), py::arg("schedule"),
        "Qualified pairs lost by the schedule's horizon.");

  // --- relaxation ---
  py::class_<JobGroup>(m, "JobGroup")
      .def(py::init<>())
      .def(py::init([](int family, int count, std::int64_t proc,
                       std::int64_t setup) {
             return JobGroup{family, count, proc, setup};
           }),
           py::arg("family"), py::arg("count"), py::arg("proc"),
           py::arg("setup"))
      .def_readwrite("family", &JobGroup::family)
      .def_readwrite("count", &JobGroup::count)
      .def_readwrite("proc", &JobGroup::proc)
      .def_readwrite("setup", &JobGroup::setup);

  py::class_<Block>(m, "Block")
      .def_readonly("family", &Block::family)
      .def_readonly("size", &Block::size)
      .def_readonly("proc", &Block::proc)
      .def_readonly("setup", &Block::setup);

  py::class_<BlockSequence>(m, "BlockSequence")
      .def_readonly("blocks", &BlockSequence::blocks)
      .def_readonly("flowtime", &BlockSequence::flowtime);

  m.def(
      "sequence_optimal",
      [](const std::vector<JobGroup>& jobs) { return sequence_optimal(jobs); },
      py::arg("jobs"),
      "Minimum single-machine flow time of the job multiset, one block per "
      "family.");
  m.def(
      "brute_force_min_flowtime",
      [](const std::vector<JobGroup>& jobs, int job_cap) {
        return brute_force_min_flowtime(jobs, job_cap);
      },
      py::arg("jobs"), py::arg("job_cap") = 8,
      "Exhaustive single-machine reference; refuses more than job_cap jobs.");

  // --- heuristics ---
  m.def("scheduling_centric", &scheduling_centric, py::arg("instance"),
        "Flow-time-greedy schedule, or None when the greedy choice fails.");
  m.def("qualification_centric", &qualification_centric, py::arg("instance"),
        "Qualification-greedy schedule, or None when the greedy choice "
        "fails.");

  // --- solver ---
  py::enum_<SolveStatus>(m, "SolveStatus")
      .value("OPTIMAL", SolveStatus::kOptimal)
      .value("SATISFIABLE", SolveStatus::kSatisfiable)
      .value("UNKNOWN", SolveStatus::kUnknown)
      .value("INFEASIBLE", SolveStatus::kInfeasible);

  py::enum_<Aggregation>(m, "Aggregation")
      .value("LEXICOGRAPHIC", Aggregation::kLexicographic)
      .value("WEIGHTED_SUM", Aggregation::kWeightedSum);

  m.attr("NO_RULES") = py::int_(static_cast<unsigned>(kNoRules));
  m.attr("RULE_FLOWTIME_ASSIGNED") =
      py::int_(static_cast<unsigned>(kRuleFlowtimeAssigned));
  m.attr("RULE_FLOWTIME_EXTENDED") =
      py::int_(static_cast<unsigned>(kRuleFlowtimeExtended));
  m.attr("RULE_MAX_FAMILY_JOBS") =
      py::int_(static_cast<unsigned>(kRuleMaxFamilyJobs));
  m.attr("RULE_MAX_MACHINE_JOBS") =
      py::int_(static_cast<unsigned>(kRuleMaxMachineJobs));
  m.attr("RULES_ALL") = py::int_(static_cast<unsigned>(kRulesAll));

  py::class_<ObjectivePair>(m, "ObjectivePair")
      .def(py::init<>())
      .def(py::init([](std::int64_t flowtime, std::int64_t disqualified) {
             return ObjectivePair{flowtime, disqualified};
           }),
           py::arg("flowtime"), py::arg("disqualified"))
      .def_readwrite("flowtime", &ObjectivePair::flowtime)
      .def_readwrite("disqualified", &ObjectivePair::disqualified)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", [](const ObjectivePair& p) {
        return "ObjectivePair(flowtime=" + std::to_string(p.flowtime) +
               ", disqualified=" + std::to_string(p.disqualified) + ")";
      });

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("rules", &SolverConfig::rules)
      .def_readwrite("aggregation", &SolverConfig::aggregation)
      .def_readwrite("time_limit_s", &SolverConfig::time_limit_s)
      .def_readwrite("warm_start", &SolverConfig::warm_start)
      .def_readwrite("node_limit", &SolverConfig::node_limit);

  py::class_<SolveStats>(m, "SolveStats")
      .def_readonly("nodes", &SolveStats::nodes)
      .def_readonly("fails", &SolveStats::fails)
      .def_readonly("wall_s", &SolveStats::wall_s)
      .def_readonly("warm_start_flowtime", &SolveStats::warm_start_flowtime);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("status", &SolveResult::status)
      .def_readonly("objective", &SolveResult::objective)
      .def_readonly("schedule", &SolveResult::schedule)
      .def_readonly("stats", &SolveResult::stats);

  m.def("solve", &solve, py::arg("instance"),
        py::arg("config") = SolverConfig{},
        "Exact branch and bound; dispatches on config.aggregation.",
        py::call_guard<py::gil_scoped_release>());
  m.def("solve_lex", &solve_lex, py::arg("instance"),
        py::arg("config") = SolverConfig{},
        "Minimizes (flow time, lost qualifications) lexicographically.",
        py::call_guard<py::gil_scoped_release>());
  m.def("solve_weighted", &solve_weighted, py::arg("instance"),
        py::arg("config") = SolverConfig{},
        "Minimizes the dominated weighted sum of the two objectives.",
        py::call_guard<py::gil_scoped_release>());
  m.def("flowtime_lower_bound", &flowtime_lower_bound, py::arg("instance"),
        py::arg("rules"),
        "Root lower bound on the total flow time under the rule set.");
  m.def("brute_force_solve", &brute_force_solve, py::arg("instance"),
        py::arg("job_cap") = 8,
        "Exhaustive reference optimum, or None when no valid schedule "
        "exists.",
        py::call_guard<py::gil_scoped_release>());

  // --- bench ---
  py::enum_<RunStatus>(m, "RunStatus")
      .value("OPT", RunStatus::kOpt)
      .value("SAT", RunStatus::kSat)
      .value("UNK", RunStatus::kUnk);

  py::class_<RunRecord>(m, "RunRecord")
      .def(py::init<>())
      .def_readwrite("instance", &RunRecord::instance)
      .def_readwrite("algorithm", &RunRecord::algorithm)
      .def_readwrite("status", &RunRecord::status)
      .def_readwrite("objective", &RunRecord::objective)
      .def_readwrite("no_solution", &RunRecord::no_solution)
      .def_readwrite("time_s", &RunRecord::time_s)
      .def_readwrite("nodes", &RunRecord::nodes)
      .def_readwrite("fails", &RunRecord::fails);

  py::class_<AlgorithmSpec>(m, "AlgorithmSpec")
      .def_readonly("label", &AlgorithmSpec::label)
      .def_readonly("config", &AlgorithmSpec::config);

  m.def("algorithm_from_label", &algorithm_from_label, py::arg("label"),
        "Parses a 5-letter algorithm label such as 'N_ALF'.");
  m.def("label_for", &label_for, py::arg("config"));
  m.def("run_suite", &run_suite, py::arg("instances"), py::arg("algorithms"),
        py::arg("time_limit_s"),
        "Runs every (instance, algorithm) pair and returns one record each.",
        py::call_guard<py::gil_scoped_release>());

  py::class_<BordaScore>(m, "BordaScore")
      .def_readonly("algorithm", &BordaScore::algorithm)
      .def_readonly("twice_score", &BordaScore::twice_score)
      .def_property_readonly(
          "score",
          [](const BordaScore& s) { return s.twice_score / 2.0; })
      .def("__repr__", [](const BordaScore& s) {
        return "BordaScore(algorithm='" + s.algorithm +
               "', twice_score=" + std::to_string(s.twice_score) + ")";
      });

  m.def("borda_ranking", &borda_ranking, py::arg("records"),
        "Mean-rank scores, best first; requires complete instance blocks.");

  py::class_<ContingencyTable>(m, "ContingencyTable")
      .def_property_readonly("cells",
                             [](const ContingencyTable& t) {
                               std::vector<std::vector<std::int64_t>> out(3);
                               for (int r = 0; r < 3; ++r) {
                                 out[r] = {t.cells[r][0], t.cells[r][1],
                                           t.cells[r][2]};
                               }
                               return out;
                             })
      .def("total", &ContingencyTable::total);

  m.def("contingency", &contingency, py::arg("records"), py::arg("a"),
        py::arg("b"),
        "3x3 status cross table of two algorithms over shared instances.");
  m.def("records_to_csv", &records_to_csv, py::arg("records"));
  m.def("records_from_csv", &records_from_csv, py::arg("text"));
}
