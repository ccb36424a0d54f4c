#pragma once

#include <cstddef>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "fltree/isomorphism.hpp"
#include "fltree/operations.hpp"
#include "fltree/tree.hpp"

namespace fltree {

inline constexpr std::size_t kInfiniteCost = std::numeric_limits<std::size_t>::max();

/// Minimum label-mismatch cost between every pair of isomorphic subtrees.
///
/// cost(u, v) is the fewest vertices of t1|u whose label differs from the
/// label of their image, over all isomorphisms t1|u -> t2|v. For internal
/// pairs it is the label mismatch of (u, v) plus a minimum-weight perfect
/// matching of the children; a child may only be matched to an isomorphic
/// child, so the matching splits into one dense assignment per shape class.
///
/// Costs are stored only for isomorphic pairs, one block per shape class.
/// Optimal matchings are recomputed on demand from the stored costs.
class MismatchTable {
 public:
  MismatchTable(const LabelledTree& t1, const LabelledTree& t2);

  const IsomorphismTable& isomorphism() const noexcept { return iso_; }
  bool isomorphic(std::size_t u, std::size_t v) const { return iso_.isomorphic(u, v); }

  /// kInfiniteCost when t1|u and t2|v are not isomorphic.
  std::size_t cost(std::size_t u, std::size_t v) const;

  /// Child pairs (child of u, child of v) of an optimal matching.
  std::vector<std::pair<std::size_t, std::size_t>> matching(std::size_t u, std::size_t v) const;

  /// Labels of t1|u left in place by the optimal isomorphism t1|u -> t2|v.
  std::set<Label> conserved(std::size_t u, std::size_t v) const;

  /// Optimal isomorphism t1 -> t2 as a vertex map (t1 vertex -> t2 vertex).
  /// Throws NotIsomorphic.
  std::vector<std::size_t> optimal_isomorphism() const;

 private:
  std::size_t slot(std::size_t u, std::size_t v) const;
  std::size_t compute(std::size_t u, std::size_t v) const;

  const LabelledTree* t1_;
  const LabelledTree* t2_;
  IsomorphismTable iso_;
  std::vector<std::size_t> position1_;  // index of a t1 vertex inside its shape class
  std::vector<std::size_t> position2_;
  std::vector<std::size_t> class_size2_;
  std::vector<std::size_t> block_offset_;
  std::vector<std::size_t> costs_;
};

/// Throws LabelSetMismatch when the trees are not over the same labels.
/// The table refers to both trees, which must outlive it.
MismatchTable mismatch_table(const LabelledTree& t1, const LabelledTree& t2);

/// Smallest number of labels a single permutation must move to turn t1 into
/// t2. Throws NotIsomorphic when the shapes differ.
std::size_t permutation_distance(const LabelledTree& t1, const LabelledTree& t2);

/// A permutation achieving permutation_distance, read off the optimal
/// isomorphism: each label of t1 is replaced by the label of its image.
Permutation optimal_permutation(const LabelledTree& t1, const LabelledTree& t2);

}  // namespace fltree
