#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "fltree/operations.hpp"
#include "fltree/tree.hpp"

namespace fltree {

/// Active labels grouped by their (parent in t1, parent in t2) pair.
struct FamilyPartition {
  std::map<std::pair<Label, Label>, std::set<Label>> groups;

  std::size_t size() const noexcept { return groups.size(); }
};

/// One edge per family-partition class, from the t1 parent to the t2 parent.
struct MovementsGraph {
  std::set<Label> vertices;
  std::set<std::pair<Label, Label>> edges;
};

/// Throws LabelSetMismatch or RootMismatch unless the pair admits a
/// link-and-cut transformation.
void require_linkcut_comparable(const LabelledTree& t1, const LabelledTree& t2);

/// Labels whose parent differs between the two trees.
std::set<Label> active_set(const LabelledTree& t1, const LabelledTree& t2);

FamilyPartition family_partition(const LabelledTree& t1, const LabelledTree& t2);

/// Number of family-partition classes, treating the virtual root as an
/// ordinary parent that is never relabelled. Unlike family_partition this is
/// defined when the children of the virtual root differ; it only requires the
/// same label set.
std::size_t family_partition_size(const LabelledTree& t1, const LabelledTree& t2);

MovementsGraph movements_graph(const LabelledTree& t1, const LabelledTree& t2);

/// Size of the active set, computed in one pass over the parent arrays.
std::size_t linkcut_distance(const LabelledTree& t1, const LabelledTree& t2);

/// A shortest link-and-cut script: one move per active label, in post-order
/// of t1 (children visited lexicographically). Every move is legal when the
/// script is replayed in order.
OperationSequence linkcut_script(const LabelledTree& t1, const LabelledTree& t2);

}  // namespace fltree
