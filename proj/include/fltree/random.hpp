#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>

#include "fltree/operations.hpp"
#include "fltree/tree.hpp"

namespace fltree {

using Rng = std::mt19937_64;

/// Uniform random recursive tree: vertex i attaches to a uniformly chosen
/// earlier vertex, restricted to vertices with fewer than `max_children`
/// children. Labels v1..vn are shuffled over the vertices.
LabelledTree random_recursive_tree(std::size_t n, Rng& rng,
                                   std::size_t max_children = std::numeric_limits<std::size_t>::max());

/// An independent random recursive tree over the labels of `like`; with
/// `keep_root` its root label matches the root label of `like`.
LabelledTree random_tree_over(const LabelledTree& like, Rng& rng, bool keep_root,
                              std::size_t max_children = std::numeric_limits<std::size_t>::max());

/// A random legal link-and-cut move on `tree`, if the tree admits one.
std::optional<LinkCutOp> random_linkcut(const LabelledTree& tree, Rng& rng);

/// A random permutation moving between 2 and `max_size` labels. With
/// `keep_root` the child of the virtual root keeps its label.
Permutation random_permutation(const LabelledTree& tree, Rng& rng, std::size_t max_size,
                               bool keep_root = false);

struct PerturbationOptions {
  double permutation_share = 0.5;
  std::size_t max_permutation_size = 3;
  bool keep_root = false;
};

struct RandomInstance {
  LabelledTree t1;
  LabelledTree t2;
  OperationSequence applied;  // replaying it on t1 gives t2
};

/// t1 is a random recursive tree; t2 is t1 after `ops` random legal
/// operations. Operations that a tiny tree cannot support are skipped.
RandomInstance random_instance(std::uint64_t seed, std::size_t n, std::size_t ops,
                               const PerturbationOptions& options = {});

RandomInstance perturb(const LabelledTree& t1, std::size_t ops, Rng& rng,
                       const PerturbationOptions& options = {});

}  // namespace fltree
