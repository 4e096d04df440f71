// Growth of random caterpillar trees.
//
// Randomness contract: every run draws from std::mt19937_64, whose output
// sequence is fixed by the C++ standard for a given 64-bit seed.  Integer
// draws in [0, k) use rejection on the raw 64-bit output (no modulo bias and
// no dependence on the standard library's distribution implementations).
// Replication r of a batch with base seed s is seeded with
// derive_seed(s, r) = splitmix64(s ^ splitmix64(r + 1)).
#ifndef RCT_SIMULATE_HPP
#define RCT_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "rct/tree.hpp"

namespace rct {

enum class GrowthModel { Uniform, PreferentialAttachment };

std::string_view to_string(GrowthModel model);
// Accepts "uniform" and "pa" (also "preferential").
GrowthModel parse_model(std::string_view name);

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replication_index);

struct SeedSpec {
  std::uint64_t base_seed = 0;
  std::optional<std::uint64_t> replication_index;

  // base_seed itself when no replication index is set.
  std::uint64_t effective_seed() const;
};

// Uniform integer in [0, bound), bound >= 1.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Spine index (1-based) chosen uniformly from 1..m.
count_t select_uniform(count_t m, Rng& rng);

// Spine index owning `ticket` when [0, n + 2m - 2) is cut into consecutive
// blocks of length degree_1, ..., degree_m.
count_t pa_index_for_ticket(std::span<const count_t> leaves, count_t ticket);

// Spine index (1-based) chosen with probability degree / (n + 2m - 2), by a
// single draw in [0, n + 2m - 2) and a scan of the cumulative degrees.
count_t select_pa(std::span<const count_t> leaves, count_t n, Rng& rng);

CaterpillarTree step_uniform(const CaterpillarTree& tree, Rng& rng);
CaterpillarTree step_pa(const CaterpillarTree& tree, Rng& rng);

CaterpillarTree grow(GrowthModel model, count_t m, count_t n, const SeedSpec& seed);

// R independent trees; tree r is grow(model, m, n, {base_seed, r}).  Work is
// spread over `threads` workers (0 = hardware concurrency); the result does
// not depend on the thread count.
std::vector<CaterpillarTree> replicate(GrowthModel model, count_t m, count_t n,
                                       count_t R, std::uint64_t base_seed,
                                       unsigned threads = 0);

}  // namespace rct

#endif  // RCT_SIMULATE_HPP
