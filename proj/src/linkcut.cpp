#include "fltree/linkcut.hpp"

#include <algorithm>
#include <vector>

#include "fltree/error.hpp"

namespace fltree {

void require_linkcut_comparable(const LabelledTree& t1, const LabelledTree& t2) {
  if (!t1.same_labels(t2)) {
    throw Error(ErrorKind::LabelSetMismatch, "trees are not labelled by the same label set");
  }
  if (t1.root() != t2.root()) {
    throw Error(ErrorKind::RootMismatch, "root labels differ ('" + t1.label(t1.root()) + "' vs '" +
                                             t2.label(t2.root()) + "'); no link-and-cut sequence exists");
  }
}

std::set<Label> active_set(const LabelledTree& t1, const LabelledTree& t2) {
  require_linkcut_comparable(t1, t2);
  std::set<Label> out;
  for (std::size_t v = 0; v < t1.size(); ++v) {
    if (t1.parent(v) != t2.parent(v)) out.insert(out.end(), t1.label(v));
  }
  return out;
}

FamilyPartition family_partition(const LabelledTree& t1, const LabelledTree& t2) {
  require_linkcut_comparable(t1, t2);
  FamilyPartition partition;
  for (std::size_t v = 0; v < t1.size(); ++v) {
    const std::size_t u = t1.parent(v);
    const std::size_t w = t2.parent(v);
    // With equal roots, an active label always has a real parent in both trees.
    if (u != w) partition.groups[{t1.label(u), t1.label(w)}].insert(t1.label(v));
  }
  return partition;
}

std::size_t family_partition_size(const LabelledTree& t1, const LabelledTree& t2) {
  if (!t1.same_labels(t2)) {
    throw Error(ErrorKind::LabelSetMismatch, "trees are not labelled by the same label set");
  }
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (std::size_t v = 0; v < t1.size(); ++v) {
    if (t1.parent(v) != t2.parent(v)) keys.emplace_back(t1.parent(v), t2.parent(v));
  }
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

MovementsGraph movements_graph(const LabelledTree& t1, const LabelledTree& t2) {
  MovementsGraph graph;
  for (const auto& [edge, members] : family_partition(t1, t2).groups) {
    graph.edges.insert(edge);
    graph.vertices.insert(edge.first);
    graph.vertices.insert(edge.second);
  }
  return graph;
}

std::size_t linkcut_distance(const LabelledTree& t1, const LabelledTree& t2) {
  require_linkcut_comparable(t1, t2);
  const auto p1 = t1.parents();
  const auto p2 = t2.parents();
  std::size_t active = 0;
  for (std::size_t v = 0; v < p1.size(); ++v) active += p1[v] != p2[v];
  return active;
}

// When v comes up in post-order, every vertex strictly inside its current
// subtree already has its final parent. If the target were inside that
// subtree, v would be its own ancestor in t2, so the move is always legal.
OperationSequence linkcut_script(const LabelledTree& t1, const LabelledTree& t2) {
  require_linkcut_comparable(t1, t2);
  OperationSequence script;
  for (std::size_t v : t1.postorder()) {
    if (t1.parent(v) != t2.parent(v)) {
      script.emplace_back(LinkCutOp(t1.label(v), t1.label(t1.parent(v)), t1.label(t2.parent(v))));
    }
  }
  return script;
}

}  // namespace fltree
