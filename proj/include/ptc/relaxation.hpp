#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ptc {

/// One entry of a job multiset: `count` identical jobs of `family`, with the
/// family's processing and setup time. Callers may pass synthetic families
/// (fresh id, setup 0) to model setup-free filler jobs; they are sequenced as
/// blocks of their own, never merged with the real family.
struct JobGroup {
  int family = 0;
  int count = 0;
  std::int64_t proc = 0;
  std::int64_t setup = 0;
};

/// Maximal same-family run of a sequence, treated as one composite job with
/// processing P = setup + size * proc and weight W = size.
struct Block {
  int family = 0;
  std::int64_t size = 0;
  std::int64_t proc = 0;
  std::int64_t setup = 0;

  std::int64_t processing_total() const { return setup + size * proc; }
  std::int64_t weight() const { return size; }
};

/// Exact mean processing time P/W. Never rounded; compare by cross
/// multiplication.
struct Mpt {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Mpt mpt(const Block& b);

/// -1, 0, +1 as a <, ==, > b. Exact on integral ratios.
int compare(const Mpt& a, const Mpt& b);

struct BlockSequence {
  std::vector<Block> blocks;
  std::int64_t flowtime = 0;
};

/// One block per distinct family in the multiset, in input order.
std::vector<Block> build_blocks(std::span<const JobGroup> jobs);

/// Left-packed evaluation: the first block pays no setup, every later block
/// pays its own. Returns the sum of job completion times.
std::int64_t flowtime_of_block_sequence(std::span<const Block> seq);

/// Flow time of every single-block move to front: entry i is the flow time
/// of block i followed by the remaining blocks in their given order (entry
/// 0 therefore evaluates `seq` itself). Computed with O(1) work per entry
/// from prefix sums; tests pin it against from-scratch evaluation.
std::vector<std::int64_t> move_to_front_flowtimes(std::span<const Block> seq);

/// Minimum single-machine flow time of the multiset. Blocks are sorted by
/// mean processing time (ties by family id), then every block is tried in
/// first position with an O(1) delta per candidate.
BlockSequence sequence_optimal(std::span<const JobGroup> jobs);

/// Exact minimum by enumerating all distinct job permutations, left-packed
/// with the first position's setup waived. Test oracle; throws
/// std::invalid_argument when the multiset exceeds `job_cap` jobs.
std::int64_t brute_force_min_flowtime(std::span<const JobGroup> jobs, int job_cap = 8);

}  // namespace ptc
