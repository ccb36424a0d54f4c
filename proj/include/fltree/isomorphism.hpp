#pragma once

#include <cstddef>
#include <vector>

#include "fltree/tree.hpp"

namespace fltree {

/// Unlabelled rooted-isomorphism relation between every subtree of one tree
/// and every subtree of another.
///
/// Shapes are encoded bottom-up, one level at a time from the deepest level
/// towards the root: a vertex's shape is the sorted list of its children's
/// shape codes, interned to a small integer. Both trees share the dictionary,
/// so `t1|u` and `t2|v` are isomorphic exactly when their codes are equal.
class IsomorphismTable {
 public:
  IsomorphismTable(const LabelledTree& t1, const LabelledTree& t2);

  bool isomorphic(std::size_t u, std::size_t v) const { return code1_[u] == code2_[v]; }
  bool trees_isomorphic() const { return isomorphic(root1_, root2_); }

  std::size_t code1(std::size_t u) const { return code1_[u]; }
  std::size_t code2(std::size_t v) const { return code2_[v]; }
  std::size_t code_count() const noexcept { return code_count_; }
  std::size_t subtree_size1(std::size_t u) const { return size1_[u]; }

  /// Vertices of t1 grouped by depth, deepest level first.
  const std::vector<std::vector<std::size_t>>& levels1() const noexcept { return levels1_; }

 private:
  std::vector<std::size_t> code1_;
  std::vector<std::size_t> code2_;
  std::vector<std::size_t> size1_;
  std::vector<std::vector<std::size_t>> levels1_;
  std::size_t code_count_ = 0;
  std::size_t root1_ = 0;
  std::size_t root2_ = 0;
};

IsomorphismTable subtree_isomorphism_table(const LabelledTree& t1, const LabelledTree& t2);

bool are_isomorphic(const LabelledTree& t1, const LabelledTree& t2);

}  // namespace fltree
