#include "ptc/relaxation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ptc {

Mpt mpt(const Block& b) { return {b.processing_total(), b.weight()}; }

int compare(const Mpt& a, const Mpt& b) {
  std::int64_t lhs = a.num * b.den;
  std::int64_t rhs = b.num * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::vector<Block> build_blocks(std::span<const JobGroup> jobs) {
  std::vector<Block> blocks;
  for (const JobGroup& g : jobs) {
    if (g.count <= 0) continue;
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const Block& b) { return b.family == g.family; });
    if (it == blocks.end()) {
      blocks.push_back({g.family, g.count, g.proc, g.setup});
    } else {
      it->size += g.count;
    }
  }
  return blocks;
}

std::int64_t flowtime_of_block_sequence(std::span<const Block> seq) {
  std::int64_t t = 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Block& b = seq[i];
    std::int64_t start = t + (i == 0 ? 0 : b.setup);
    // Jobs complete at start + p, start + 2p, ..., start + size*p.
    total += b.size * start + b.proc * b.size * (b.size + 1) / 2;
    t = start + b.size * b.proc;
  }
  return total;
}

std::vector<std::int64_t> move_to_front_flowtimes(std::span<const Block> seq) {
  std::size_t r = seq.size();
  std::vector<std::int64_t> result(r, 0);
  if (r == 0) return result;

  // All-setups-paid evaluation: with prefix completions D_i = sum_{j<=i} P_j,
  // the flow time is G - C - N*s_first, where G = sum W_i*D_i and
  // C = sum p_i*W_i*(W_i-1)/2 corrects the within-block completions.
  std::int64_t g = 0;
  std::int64_t c = 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> prefix(r);   // D_i
  std::vector<std::int64_t> w_before(r); // sum of W_j for j < i
  std::int64_t running = 0;
  std::int64_t weights = 0;
  for (std::size_t i = 0; i < r; ++i) {
    w_before[i] = weights;
    running += seq[i].processing_total();
    prefix[i] = running;
    weights += seq[i].weight();
    g += seq[i].weight() * running;
    c += seq[i].proc * seq[i].weight() * (seq[i].weight() - 1) / 2;
  }
  n = weights;

  // Moving block j to the front leaves D_i unchanged for i > j and adds P_j
  // to every earlier prefix, giving an O(1) delta per candidate.
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t p = seq[j].processing_total();
    std::int64_t w = seq[j].weight();
    std::int64_t moved_g = g + p * w_before[j] + w * (p - prefix[j]);
    result[j] = moved_g - c - n * seq[j].setup;
  }
  return result;
}

BlockSequence sequence_optimal(std::span<const JobGroup> jobs) {
  BlockSequence best;
  best.blocks = build_blocks(jobs);
  if (best.blocks.empty()) return best;

  std::sort(best.blocks.begin(), best.blocks.end(),
            [](const Block& a, const Block& b) {
              int c = compare(mpt(a), mpt(b));
              if (c != 0) return c < 0;
              return a.family < b.family;
            });

  auto candidates = move_to_front_flowtimes(best.blocks);
  std::size_t pick = 0;
  for (std::size_t j = 1; j < candidates.size(); ++j) {
    if (candidates[j] < candidates[pick]) pick = j;
  }
  if (pick != 0) {
    Block front = best.blocks[pick];
    best.blocks.erase(best.blocks.begin() + static_cast<std::ptrdiff_t>(pick));
    best.blocks.insert(best.blocks.begin(), front);
  }
  best.flowtime = candidates[pick];
  return best;
}

std::int64_t brute_force_min_flowtime(std::span<const JobGroup> jobs, int job_cap) {
  std::map<int, std::pair<std::int64_t, std::int64_t>> params;  // family -> (p, s)
  std::vector<int> labels;
  for (const JobGroup& g : jobs) {
    params[g.family] = {g.proc, g.setup};
    for (int k = 0; k < g.count; ++k) labels.push_back(g.family);
  }
  if (static_cast<int>(labels.size()) > job_cap) {
    throw std::invalid_argument("brute_force_min_flowtime: too many jobs");
  }
  if (labels.empty()) return 0;

  std::sort(labels.begin(), labels.end());
  std::int64_t best = -1;
  do {
    std::int64_t t = 0;
    std::int64_t total = 0;
    int prev = -1;
    for (int f : labels) {
      const auto& [p, s] = params[f];
      if (prev >= 0 && prev != f) t += s;
      t += p;
      total += t;
      prev = f;
    }
    if (best < 0 || total < best) best = total;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

}  // namespace ptc
