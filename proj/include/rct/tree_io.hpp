// JSON tree document: {"m":<int>=2>,"n":<int>=0>,"leaves":[m counts summing to n]}
#ifndef RCT_TREE_IO_HPP
#define RCT_TREE_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "rct/tree.hpp"

namespace rct {

// Not JSON, or missing/mistyped fields.
class TreeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed document describing an impossible tree (m < 2, negative
// counts, wrong number of leaves, leaves not summing to n).
class TreeInvariantError : public DomainError {
 public:
  using DomainError::DomainError;
};

std::string serialize(const CaterpillarTree& tree);

CaterpillarTree parse_tree(std::string_view text);

}  // namespace rct

#endif  // RCT_TREE_IO_HPP
