// tests/test_solver.cpp: exact solver against the exhaustive oracle, the
// frozen reference results, and the search statistics contracts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "ptc/heuristics.hpp"
#include "ptc/instance.hpp"
#include "ptc/schedule.hpp"
#include "ptc/solver.hpp"
#include "test_support.hpp"

using namespace ptc;
using ptc::testing::counter_instance;
using ptc::testing::infeasible_toy;
using ptc::testing::reference_instance;

namespace {

const Instance& ref() {
  static const Instance inst = reference_instance();
  return inst;
}

// One job of each of the three demo families on one machine, thresholds too
// generous to ever lose a qualification.
Instance one_of_each_instance() {
  Instance inst;
  inst.machines = 1;
  inst.families = {
      Family{1, 1, 2, 5, 1000, {1}},
      Family{2, 1, 3, 3, 1000, {1}},
      Family{3, 1, 4, 1, 1000, {1}},
  };
  return inst;
}

Instance small_generated(std::uint64_t seed) {
  GenConfig cfg;
  cfg.jobs = 5 + static_cast<int>(seed % 4);
  cfg.machines = 1 + static_cast<int>(seed % 2);
  cfg.families = 2 + static_cast<int>(seed % 2);
  cfg.seed = seed;
  return generate_instance(cfg);
}

void check_result_schedule(const Instance& inst, const SolveResult& result) {
  REQUIRE(result.schedule.has_value());
  CHECK(check_validity(inst, *result.schedule).empty());
  REQUIRE(result.objective.has_value());
  CHECK(flowtime(*result.schedule) == result.objective->flowtime);
  CHECK(count_disqualifications(inst, *result.schedule).count ==
        result.objective->disqualified);
}

}  // namespace

TEST_CASE("status names") {
  CHECK(to_string(SolveStatus::kOptimal) == "OPTIMAL");
  CHECK(to_string(SolveStatus::kSatisfiable) == "SATISFIABLE");
  CHECK(to_string(SolveStatus::kUnknown) == "UNKNOWN");
  CHECK(to_string(SolveStatus::kInfeasible) == "INFEASIBLE");
}

TEST_CASE("reference instance solves to the known optimum") {
  SolveResult result = solve_lex(ref());
  CHECK(result.status == SolveStatus::kOptimal);
  REQUIRE(result.objective.has_value());
  CHECK(result.objective->flowtime == 114);
  CHECK(result.objective->disqualified == 3);
  check_result_schedule(ref(), result);
  CHECK(result.stats.nodes > 0);
  CHECK(result.stats.wall_s >= 0.0);
}

TEST_CASE("single machine instance matches the relaxation") {
  // One machine, huge thresholds: the optimum is the relaxation value.
  SolveResult result = solve_lex(counter_instance());
  CHECK(result.status == SolveStatus::kOptimal);
  REQUIRE(result.objective.has_value());
  CHECK(result.objective->flowtime == 181);
  CHECK(result.objective->disqualified == 0);
  check_result_schedule(counter_instance(), result);

  SolveResult tiny = solve_lex(one_of_each_instance());
  REQUIRE(tiny.objective.has_value());
  CHECK(tiny.objective->flowtime == 22);
  CHECK(tiny.objective->disqualified == 0);
}

TEST_CASE("impossible threshold is reported infeasible") {
  SolveResult result = solve_lex(infeasible_toy());
  CHECK(result.status == SolveStatus::kInfeasible);
  CHECK_FALSE(result.objective.has_value());
  CHECK_FALSE(result.schedule.has_value());
}

TEST_CASE("brute force oracle spot checks") {
  auto tiny = brute_force_solve(one_of_each_instance());
  REQUIRE(tiny.has_value());
  CHECK(tiny->flowtime == 22);
  CHECK(tiny->disqualified == 0);

  CHECK_FALSE(brute_force_solve(infeasible_toy()).has_value());

  auto counter = brute_force_solve(counter_instance());
  REQUIRE(counter.has_value());
  CHECK(counter->flowtime == 181);

  // Ten jobs exceed the default cap.
  CHECK_THROWS_AS((void)brute_force_solve(ref()), std::invalid_argument);
}

TEST_CASE("solver agrees with the oracle on 200 small instances") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Instance inst = small_generated(seed);
    auto expected = brute_force_solve(inst);
    SolveResult result = solve_lex(inst);
    REQUIRE(expected.has_value());  // the generator only emits feasible ones
    REQUIRE(result.status == SolveStatus::kOptimal);
    REQUIRE(result.objective.has_value());
    CHECK(result.objective->flowtime == expected->flowtime);
    CHECK(result.objective->disqualified == expected->disqualified);
    check_result_schedule(inst, result);
  }
}

TEST_CASE("weighted aggregation finds the same optimum") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = small_generated(seed);
    SolveResult lex = solve_lex(inst);
    SolverConfig cfg;
    cfg.aggregation = Aggregation::kWeightedSum;
    SolveResult weighted = solve_weighted(inst, cfg);
    CHECK(weighted.status == SolveStatus::kOptimal);
    REQUIRE(weighted.objective.has_value());
    CHECK(*weighted.objective == *lex.objective);
    check_result_schedule(inst, weighted);

    // The dispatcher picks the weighted search from the config.
    SolveResult dispatched = solve(inst, cfg);
    CHECK(dispatched.status == weighted.status);
    CHECK(*dispatched.objective == *weighted.objective);
  }
  SolveResult weighted_ref = solve_weighted(ref());
  REQUIRE(weighted_ref.objective.has_value());
  CHECK(weighted_ref.objective->flowtime == 114);
  CHECK(weighted_ref.objective->disqualified == 3);
}

TEST_CASE("every rule set reaches the same optimum") {
  const unsigned rule_sets[] = {kNoRules, kRuleFlowtimeExtended,
                                kRuleMaxFamilyJobs, kRuleMaxMachineJobs,
                                kRulesAll};
  for (std::uint64_t seed = 10; seed <= 100; seed += 10) {
    Instance inst = small_generated(seed);
    std::optional<ObjectivePair> first;
    for (unsigned rules : rule_sets) {
      SolverConfig cfg;
      cfg.rules = rules;
      SolveResult result = solve_lex(inst, cfg);
      REQUIRE(result.status == SolveStatus::kOptimal);
      REQUIRE(result.objective.has_value());
      if (!first) {
        first = result.objective;
      } else {
        CHECK(*result.objective == *first);
      }
    }
  }
}

TEST_CASE("filtering never explores more nodes than no filtering") {
  for (std::uint64_t seed = 300; seed < 312; ++seed) {
    GenConfig gen;
    gen.jobs = 10;
    gen.machines = 2;
    gen.families = 3;
    gen.seed = seed;
    Instance inst = generate_instance(gen);

    SolverConfig none;
    none.rules = kNoRules;
    SolveResult bare = solve_lex(inst, none);

    SolverConfig all;
    all.rules = kRulesAll;
    SolveResult filtered = solve_lex(inst, all);

    REQUIRE(bare.status == SolveStatus::kOptimal);
    REQUIRE(filtered.status == SolveStatus::kOptimal);
    CHECK(*bare.objective == *filtered.objective);
    CHECK(filtered.stats.nodes <= bare.stats.nodes);
  }
}

TEST_CASE("the search is deterministic") {
  SolveResult a = solve_lex(ref());
  SolveResult b = solve_lex(ref());
  CHECK(a.status == b.status);
  CHECK(*a.objective == *b.objective);
  CHECK(a.stats.nodes == b.stats.nodes);
  CHECK(a.stats.fails == b.stats.fails);
  REQUIRE(a.schedule.has_value());
  REQUIRE(b.schedule.has_value());
  CHECK(*a.schedule == *b.schedule);
}

TEST_CASE("node limit stops the search early") {
  SolverConfig cfg;
  cfg.node_limit = 1;
  SolveResult cold = solve_lex(ref(), cfg);
  CHECK(cold.status == SolveStatus::kUnknown);
  CHECK_FALSE(cold.objective.has_value());
  CHECK(cold.stats.nodes <= 1);

  cfg.warm_start = true;
  SolveResult warm = solve_lex(ref(), cfg);
  CHECK(warm.status == SolveStatus::kSatisfiable);
  REQUIRE(warm.objective.has_value());
  CHECK(warm.objective->flowtime == 123);
  REQUIRE(warm.stats.warm_start_flowtime.has_value());
  CHECK(*warm.stats.warm_start_flowtime == 123);
  check_result_schedule(ref(), warm);
}

TEST_CASE("warm start never hurts the final answer") {
  SolverConfig cfg;
  cfg.warm_start = true;
  SolveResult warm = solve_lex(ref(), cfg);
  CHECK(warm.status == SolveStatus::kOptimal);
  REQUIRE(warm.objective.has_value());
  CHECK(warm.objective->flowtime == 114);
  CHECK(warm.objective->disqualified == 3);
  REQUIRE(warm.stats.warm_start_flowtime.has_value());
  CHECK(*warm.stats.warm_start_flowtime == 123);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = small_generated(seed);
    SolveResult cold = solve_lex(inst);
    SolverConfig wcfg;
    wcfg.warm_start = true;
    SolveResult warmed = solve_lex(inst, wcfg);
    CHECK(warmed.status == SolveStatus::kOptimal);
    CHECK(*warmed.objective == *cold.objective);
  }
}

TEST_CASE("the store observer sees every surviving node") {
  std::int64_t observed = 0;
  std::function<void(const DomainStore&)> observer =
      [&](const DomainStore& store) {
        CHECK_FALSE(store.failed());
        ++observed;
      };
  SolverConfig cfg;
  cfg.store_observer = &observer;
  SolveResult result = solve_lex(ref(), cfg);
  CHECK(result.status == SolveStatus::kOptimal);
  CHECK(observed == result.stats.nodes);
  CHECK(observed > 0);
}

TEST_CASE("root lower bound goldens") {
  CHECK(flowtime_lower_bound(ref(), kRulesAll) == 6);
  CHECK(flowtime_lower_bound(ref(), kNoRules) == 0);
  // The bound never exceeds the optimum.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance inst = small_generated(seed);
    SolveResult result = solve_lex(inst);
    CHECK(flowtime_lower_bound(inst, kRulesAll) <=
          result.objective->flowtime);
  }
}
