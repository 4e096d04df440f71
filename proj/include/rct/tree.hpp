// Caterpillar tree data model.
//
// A caterpillar tree here is a fixed central path (spine) of m vertices plus
// a number of pendant leaves hanging off each spine vertex.  Spine vertices
// are numbered 1..m from the left in every public interface; the leftmost
// spine vertex is the root for depth purposes.
#ifndef RCT_TREE_HPP
#define RCT_TREE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rct {

using count_t = std::int64_t;

// Raised when an argument violates a documented precondition (m < 2,
// out-of-range spine index, n = 0 where an index is undefined, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Degrees of the m spine vertices.  Endpoints carry one spine edge, interior
// vertices two, so degrees[i] = leaves[i] + (1 or 2).
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<count_t> degrees);

  std::size_t size() const { return degrees_.size(); }
  // 1-based.
  count_t operator[](std::size_t i) const { return degrees_.at(i - 1); }
  count_t total() const;
  std::span<const count_t> values() const { return degrees_; }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<count_t> degrees_;
};

// One depth per vertex: spine vertex i sits at depth i-1, each of its leaves
// at depth i.  Stored in ascending order.
class DepthMultiset {
 public:
  explicit DepthMultiset(std::vector<count_t> sorted_depths);

  std::size_t size() const { return depths_.size(); }
  count_t total() const;
  std::span<const count_t> values() const { return depths_; }

 private:
  std::vector<count_t> depths_;
};

class CaterpillarTree {
 public:
  // Validates m >= 2, every leaf count >= 0 and sum(leaves) == n.
  CaterpillarTree(count_t m, count_t n, std::vector<count_t> leaves);

  count_t m() const { return m_; }
  count_t n() const { return n_; }
  std::span<const count_t> leaves() const { return leaves_; }
  // 1-based leaf count of spine vertex i.
  count_t leaves_at(count_t i) const;

  friend bool operator==(const CaterpillarTree&,
                         const CaterpillarTree&) = default;

 private:
  count_t m_;
  count_t n_;
  std::vector<count_t> leaves_;
};

// Spine-edge contribution to the degree of spine vertex i (1-based).
inline count_t spine_offset(count_t m, count_t i) {
  return (i == 1 || i == m) ? 1 : 2;
}

// The (1,2,...,2,1) offset vector.
std::vector<count_t> spine_offsets(count_t m);

CaterpillarTree new_tree(count_t m);

// Returns a copy of `tree` with one extra leaf on spine vertex i (1-based).
CaterpillarTree attach_leaf(const CaterpillarTree& tree, count_t i);

DegreeVector degrees(const CaterpillarTree& tree);

DepthMultiset depths(const CaterpillarTree& tree);

}  // namespace rct

#endif  // RCT_TREE_HPP
