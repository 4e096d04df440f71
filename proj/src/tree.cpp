#include "rct/tree.hpp"

#include <algorithm>
#include <numeric>

namespace rct {

DegreeVector::DegreeVector(std::vector<count_t> degrees)
    : degrees_(std::move(degrees)) {
  const auto m = static_cast<count_t>(degrees_.size());
  if (m < 2) throw DomainError("degree vector needs at least 2 spine vertices");
  for (count_t i = 1; i <= m; ++i) {
    if (degrees_[i - 1] < spine_offset(m, i)) {
      throw DomainError("degree of spine vertex " + std::to_string(i) +
                        " is below its spine-edge count");
    }
  }
}

count_t DegreeVector::total() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), count_t{0});
}

DepthMultiset::DepthMultiset(std::vector<count_t> sorted_depths)
    : depths_(std::move(sorted_depths)) {}

count_t DepthMultiset::total() const {
  return std::accumulate(depths_.begin(), depths_.end(), count_t{0});
}

CaterpillarTree::CaterpillarTree(count_t m, count_t n,
                                 std::vector<count_t> leaves)
    : m_(m), n_(n), leaves_(std::move(leaves)) {
  if (m_ < 2) throw DomainError("spine length m must be >= 2");
  if (n_ < 0) throw DomainError("step count n must be >= 0");
  if (static_cast<count_t>(leaves_.size()) != m_) {
    throw DomainError("expected " + std::to_string(m_) + " leaf counts, got " +
                      std::to_string(leaves_.size()));
  }
  if (std::any_of(leaves_.begin(), leaves_.end(),
                  [](count_t l) { return l < 0; })) {
    throw DomainError("leaf counts must be non-negative");
  }
  const count_t sum = std::accumulate(leaves_.begin(), leaves_.end(), count_t{0});
  if (sum != n_) {
    throw DomainError("leaf counts sum to " + std::to_string(sum) +
                      " but n = " + std::to_string(n_));
  }
}

count_t CaterpillarTree::leaves_at(count_t i) const {
  if (i < 1 || i > m_) throw DomainError("spine index out of range");
  return leaves_[static_cast<std::size_t>(i - 1)];
}

std::vector<count_t> spine_offsets(count_t m) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  std::vector<count_t> offsets(static_cast<std::size_t>(m), 2);
  offsets.front() = 1;
  offsets.back() = 1;
  return offsets;
}

CaterpillarTree new_tree(count_t m) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  return CaterpillarTree(m, 0, std::vector<count_t>(static_cast<std::size_t>(m), 0));
}

CaterpillarTree attach_leaf(const CaterpillarTree& tree, count_t i) {
  if (i < 1 || i > tree.m()) {
    throw DomainError("spine index " + std::to_string(i) + " outside 1.." +
                      std::to_string(tree.m()));
  }
  std::vector<count_t> leaves(tree.leaves().begin(), tree.leaves().end());
  ++leaves[static_cast<std::size_t>(i - 1)];
  return CaterpillarTree(tree.m(), tree.n() + 1, std::move(leaves));
}

DegreeVector degrees(const CaterpillarTree& tree) {
  std::vector<count_t> d(tree.leaves().begin(), tree.leaves().end());
  for (count_t i = 1; i <= tree.m(); ++i) {
    d[static_cast<std::size_t>(i - 1)] += spine_offset(tree.m(), i);
  }
  return DegreeVector(std::move(d));
}

DepthMultiset depths(const CaterpillarTree& tree) {
  // Depth k collects spine vertex k+1 (if any) and the leaves of spine vertex
  // k (if k >= 1); emitting by k keeps the result sorted.
  std::vector<count_t> out;
  out.reserve(static_cast<std::size_t>(tree.m() + tree.n()));
  for (count_t k = 0; k <= tree.m(); ++k) {
    if (k < tree.m()) out.push_back(k);
    if (k >= 1) out.insert(out.end(), static_cast<std::size_t>(tree.leaves_at(k)), k);
  }
  return DepthMultiset(std::move(out));
}

}  // namespace rct
