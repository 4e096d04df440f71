#include "rct/simulate.hpp"

#include <string>

#include "rct/parallel.hpp"

namespace rct {

std::string_view to_string(GrowthModel model) {
  switch (model) {
    case GrowthModel::Uniform:
      return "uniform";
    case GrowthModel::PreferentialAttachment:
      return "pa";
  }
  return "unknown";
}

GrowthModel parse_model(std::string_view name) {
  if (name == "uniform") return GrowthModel::Uniform;
  if (name == "pa" || name == "preferential") return GrowthModel::PreferentialAttachment;
  throw DomainError("unknown growth model '" + std::string(name) +
                    "' (expected uniform or pa)");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t replication_index) {
  return splitmix64(base_seed ^ splitmix64(replication_index + 1));
}

std::uint64_t SeedSpec::effective_seed() const {
  return replication_index ? derive_seed(base_seed, *replication_index) : base_seed;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Values below 2^64 mod bound would be over-represented.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

count_t select_uniform(count_t m, Rng& rng) {
  return static_cast<count_t>(uniform_below(rng, static_cast<std::uint64_t>(m))) + 1;
}

count_t pa_index_for_ticket(std::span<const count_t> leaves, count_t ticket) {
  const auto m = static_cast<count_t>(leaves.size());
  // TODO: swap in a Fenwick tree if spines grow past a few thousand vertices.
  for (count_t i = 1; i < m; ++i) {
    ticket -= leaves[static_cast<std::size_t>(i - 1)] + spine_offset(m, i);
    if (ticket < 0) return i;
  }
  return m;
}

count_t select_pa(std::span<const count_t> leaves, count_t n, Rng& rng) {
  const auto m = static_cast<count_t>(leaves.size());
  const count_t total = n + 2 * m - 2;
  return pa_index_for_ticket(
      leaves, static_cast<count_t>(uniform_below(rng, static_cast<std::uint64_t>(total))));
}

CaterpillarTree step_uniform(const CaterpillarTree& tree, Rng& rng) {
  return attach_leaf(tree, select_uniform(tree.m(), rng));
}

CaterpillarTree step_pa(const CaterpillarTree& tree, Rng& rng) {
  return attach_leaf(tree, select_pa(tree.leaves(), tree.n(), rng));
}

CaterpillarTree grow(GrowthModel model, count_t m, count_t n, const SeedSpec& seed) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  if (n < 0) throw DomainError("step count n must be >= 0");
  Rng rng(seed.effective_seed());
  // In-place builder; the loop owns the only copy until the tree is sealed.
  std::vector<count_t> leaves(static_cast<std::size_t>(m), 0);
  for (count_t k = 0; k < n; ++k) {
    const count_t i = model == GrowthModel::Uniform ? select_uniform(m, rng)
                                                    : select_pa(leaves, k, rng);
    ++leaves[static_cast<std::size_t>(i - 1)];
  }
  return CaterpillarTree(m, n, std::move(leaves));
}

std::vector<CaterpillarTree> replicate(GrowthModel model, count_t m, count_t n,
                                       count_t R, std::uint64_t base_seed,
                                       unsigned threads) {
  if (R < 1) throw DomainError("replication count R must be >= 1");
  if (m < 2) throw DomainError("spine length m must be >= 2");
  std::vector<CaterpillarTree> out(static_cast<std::size_t>(R), new_tree(m));
  parallel_for(out.size(), threads, [&](std::size_t r) {
    out[r] = grow(model, m, n, SeedSpec{base_seed, r});
  });
  return out;
}

}  // namespace rct
