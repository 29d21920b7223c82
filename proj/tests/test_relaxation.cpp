// tests/test_relaxation.cpp: single-machine sequencing oracle and the
// frozen worked examples it must reproduce.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ptc/relaxation.hpp"

using namespace ptc;

namespace {

// Three families, one job each: p = (2,3,4), s = (5,3,1).
std::vector<JobGroup> three_singletons() {
  return {{1, 1, 2, 5}, {2, 1, 3, 3}, {3, 1, 4, 1}};
}

// Two families where plain SMPT is beaten by swapping the first block:
// f1: 2 jobs, p=11, s=2; f2: 3 jobs, p=12, s=9.
std::vector<JobGroup> smpt_counter() {
  return {{1, 2, 11, 2}, {2, 3, 12, 9}};
}

std::vector<int> family_order(const BlockSequence& seq) {
  std::vector<int> order;
  for (const Block& b : seq.blocks) order.push_back(b.family);
  return order;
}

}  // namespace

TEST_CASE("build_blocks collapses each family into one block") {
  auto blocks = build_blocks(three_singletons());
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].processing_total() == 7);
  CHECK(blocks[0].weight() == 1);
  CHECK(blocks[1].processing_total() == 6);
  CHECK(blocks[2].processing_total() == 5);

  auto counter = build_blocks(smpt_counter());
  REQUIRE(counter.size() == 2);
  CHECK(counter[0].processing_total() == 24);
  CHECK(counter[0].weight() == 2);
  CHECK(counter[1].processing_total() == 45);
  CHECK(counter[1].weight() == 3);

  std::vector<JobGroup> one = {{7, 4, 3, 2}};
  auto single = build_blocks(one);
  REQUIRE(single.size() == 1);
  CHECK(single[0].processing_total() == 2 + 4 * 3);
  CHECK(single[0].weight() == 4);
}

TEST_CASE("mpt is an exact rational") {
  Block b24{1, 2, 11, 2};
  Block b45{2, 3, 12, 9};
  CHECK(compare(mpt(b24), Mpt{12, 1}) == 0);
  CHECK(compare(mpt(b45), Mpt{15, 1}) == 0);
  CHECK(compare(mpt(b24), mpt(b45)) == -1);
  CHECK(compare(mpt(b45), mpt(b24)) == 1);

  Block unit{3, 1, 5, 0};
  CHECK(compare(mpt(unit), Mpt{5, 1}) == 0);

  // Equal ratios with different denominators.
  Block a{1, 2, 2, 0};  // 4/2
  Block c{2, 1, 2, 0};  // 2/1
  CHECK(compare(mpt(a), mpt(c)) == 0);
}

TEST_CASE("flowtime_of_block_sequence pins the worked orders") {
  auto blocks = build_blocks(smpt_counter());
  std::vector<Block> f1_first = {blocks[0], blocks[1]};
  std::vector<Block> f2_first = {blocks[1], blocks[0]};
  CHECK(flowtime_of_block_sequence(f1_first) == 198);
  CHECK(flowtime_of_block_sequence(f2_first) == 181);

  std::vector<Block> lone = {Block{1, 1, 5, 7}};
  CHECK(flowtime_of_block_sequence(lone) == 5);  // no setup at time 0
}

TEST_CASE("sequence_optimal reproduces the frozen optima") {
  auto best = sequence_optimal(three_singletons());
  CHECK(best.flowtime == 22);
  CHECK(family_order(best) == std::vector<int>{1, 3, 2});

  std::vector<JobGroup> with_extra = {{1, 1, 2, 5}, {2, 2, 3, 3}, {3, 1, 4, 1}};
  auto extra = sequence_optimal(with_extra);
  CHECK(extra.flowtime == 37);
  CHECK(family_order(extra) == std::vector<int>{1, 2, 3});

  auto counter = sequence_optimal(smpt_counter());
  CHECK(counter.flowtime == 181);
  CHECK(family_order(counter) == std::vector<int>{2, 1});

  std::vector<JobGroup> lone = {{1, 1, 9, 1}};
  CHECK(sequence_optimal(lone).flowtime == 9);
}

TEST_CASE("sequence_optimal with zero-setup filler families") {
  // One job of each real family plus fillers drawn SPT-first from the
  // remaining jobs: two p=2 jobs, one p=3 job.
  std::vector<JobGroup> extended = three_singletons();
  extended.push_back({4, 2, 2, 0});
  extended.push_back({5, 1, 3, 0});
  CHECK(sequence_optimal(extended).flowtime == 55);

  // Same but with two p=3 fillers: the known awkward case, optimum 73.
  std::vector<JobGroup> wider = three_singletons();
  wider.push_back({4, 2, 2, 0});
  wider.push_back({5, 2, 3, 0});
  auto best = sequence_optimal(wider);
  CHECK(best.flowtime == 73);
  CHECK(family_order(best) == std::vector<int>{1, 4, 5, 3, 2});

  // Family-count saturation probes used by the dichotomy rules.
  std::vector<JobGroup> two_f2 = {{1, 1, 2, 5}, {2, 2, 3, 3}, {3, 1, 4, 1}};
  std::vector<JobGroup> three_f2 = {{1, 1, 2, 5}, {2, 3, 3, 3}, {3, 1, 4, 1}};
  CHECK(sequence_optimal(two_f2).flowtime == 37);
  CHECK(sequence_optimal(three_f2).flowtime == 53);
}

TEST_CASE("SMPT tail: blocks after the first are MPT-sorted") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<JobGroup> jobs;
    int families = 1 + static_cast<int>(rng() % 4);
    for (int f = 0; f < families; ++f) {
      jobs.push_back({f + 1, 1 + static_cast<int>(rng() % 3),
                      1 + static_cast<std::int64_t>(rng() % 10),
                      static_cast<std::int64_t>(rng() % 6)});
    }
    auto best = sequence_optimal(jobs);
    for (std::size_t i = 2; i < best.blocks.size(); ++i) {
      CHECK(compare(mpt(best.blocks[i - 1]), mpt(best.blocks[i])) <= 0);
    }
  }
}

TEST_CASE("tie neutrality: swapping adjacent equal-MPT tail blocks") {
  Block head{9, 1, 5, 0};
  Block a{1, 1, 1, 3};  // MPT 4
  Block b{2, 2, 3, 2};  // MPT 8/2 = 4
  std::vector<Block> ab = {head, a, b};
  std::vector<Block> ba = {head, b, a};
  CHECK(flowtime_of_block_sequence(ab) == flowtime_of_block_sequence(ba));

  Block c{3, 2, 3, 0};  // MPT 3
  Block d{4, 1, 3, 0};  // MPT 3
  std::vector<Block> cd = {head, c, d};
  std::vector<Block> dc = {head, d, c};
  CHECK(flowtime_of_block_sequence(cd) == flowtime_of_block_sequence(dc));
}

TEST_CASE("move_to_front_flowtimes equals from-scratch evaluation") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    int count = 1 + static_cast<int>(rng() % 5);
    std::vector<Block> blocks;
    for (int i = 0; i < count; ++i) {
      blocks.push_back({i + 1, 1 + static_cast<std::int64_t>(rng() % 3),
                        1 + static_cast<std::int64_t>(rng() % 9),
                        static_cast<std::int64_t>(rng() % 7)});
    }
    auto deltas = move_to_front_flowtimes(blocks);
    REQUIRE(deltas.size() == blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::vector<Block> moved;
      moved.push_back(blocks[i]);
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j != i) moved.push_back(blocks[j]);
      }
      CHECK(deltas[i] == flowtime_of_block_sequence(moved));
    }
  }
}

TEST_CASE("oracle equivalence on seeded multisets") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int families = 1 + static_cast<int>(rng() % 4);
    int budget = 8;
    std::vector<JobGroup> jobs;
    for (int f = 0; f < families; ++f) {
      int slack = budget - (families - f - 1);
      int count = 1 + static_cast<int>(rng() % std::max(1, slack));
      budget -= count;
      jobs.push_back({f + 1, count, 1 + static_cast<std::int64_t>(rng() % 10),
                      static_cast<std::int64_t>(rng() % 6)});
    }
    auto fast = sequence_optimal(jobs).flowtime;
    auto exact = brute_force_min_flowtime(jobs);
    REQUIRE(fast == exact);
  }
}

TEST_CASE("brute force oracle spot values") {
  CHECK(brute_force_min_flowtime(three_singletons()) == 22);
  CHECK(brute_force_min_flowtime(smpt_counter()) == 181);
  std::vector<JobGroup> lone = {{1, 1, 6, 4}};
  CHECK(brute_force_min_flowtime(lone) == 6);
}

TEST_CASE("adding a job never decreases the optimum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int families = 1 + static_cast<int>(rng() % 3);
    std::vector<JobGroup> jobs;
    for (int f = 0; f < families; ++f) {
      jobs.push_back({f + 1, 1 + static_cast<int>(rng() % 3),
                      1 + static_cast<std::int64_t>(rng() % 10),
                      static_cast<std::int64_t>(rng() % 6)});
    }
    auto before = sequence_optimal(jobs).flowtime;

    std::vector<JobGroup> more = jobs;
    if (rng() % 2 == 0) {
      more[rng() % more.size()].count += 1;
    } else {
      more.push_back({families + 1, 1, 1 + static_cast<std::int64_t>(rng() % 10),
                      static_cast<std::int64_t>(rng() % 6)});
    }
    CHECK(sequence_optimal(more).flowtime >= before);
  }
}

TEST_CASE("brute force refuses oversized multisets") {
  std::vector<JobGroup> big = {{1, 9, 2, 1}};
  CHECK_THROWS_AS((void)brute_force_min_flowtime(big), std::invalid_argument);
  CHECK_NOTHROW((void)brute_force_min_flowtime(big, 9));
}
