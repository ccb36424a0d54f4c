#include "fltree/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "fltree/error.hpp"

namespace fltree {

namespace {

std::size_t uniform_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

// Vertex 0 of the result is the root and carries labels[0].
LabelledTree recursive_tree_with(std::vector<Label> labels, Rng& rng, std::size_t max_children) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a tree needs at least one vertex");
  if (max_children == 0 && n > 1) {
    throw Error(ErrorKind::InvalidArgument, "max_children must be positive");
  }

  std::vector<std::size_t> parent(n, kVirtualRoot);
  std::vector<std::size_t> child_count(n, 0);
  std::vector<std::size_t> open{0};  // vertices that can still take a child
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t slot = uniform_index(rng, open.size());
    const std::size_t p = open[slot];
    parent[v] = p;
    if (++child_count[p] == max_children) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(v);
  }
  return LabelledTree::from_parent_positions(std::move(labels), parent);
}

}  // namespace

LabelledTree random_recursive_tree(std::size_t n, Rng& rng, std::size_t max_children) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i + 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  return recursive_tree_with(std::move(labels), rng, max_children);
}

LabelledTree random_tree_over(const LabelledTree& like, Rng& rng, bool keep_root,
                              std::size_t max_children) {
  std::vector<Label> labels(like.labels().begin(), like.labels().end());
  std::shuffle(labels.begin(), labels.end(), rng);
  if (keep_root) {
    auto it = std::find(labels.begin(), labels.end(), like.label(like.root()));
    std::iter_swap(labels.begin(), it);
  }
  return recursive_tree_with(std::move(labels), rng, max_children);
}

std::optional<LinkCutOp> random_linkcut(const LabelledTree& tree, Rng& rng) {
  const std::size_t n = tree.size();
  std::vector<std::size_t> movable;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != tree.root()) movable.push_back(v);
  }
  std::shuffle(movable.begin(), movable.end(), rng);
  for (std::size_t v : movable) {
    std::vector<std::size_t> targets;
    for (std::size_t w = 0; w < n; ++w) {
      if (w != tree.parent(v) && !tree.is_descendant(w, v)) targets.push_back(w);
    }
    if (targets.empty()) continue;
    const std::size_t w = targets[uniform_index(rng, targets.size())];
    return LinkCutOp(tree.label(v), tree.label(tree.parent(v)), tree.label(w));
  }
  return std::nullopt;
}

Permutation random_permutation(const LabelledTree& tree, Rng& rng, std::size_t max_size,
                               bool keep_root) {
  std::vector<std::size_t> pool;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (!(keep_root && v == tree.root())) pool.push_back(v);
  }
  const std::size_t cap = std::min(max_size, pool.size());
  if (cap < 2) return {};
  const std::size_t size = 2 + uniform_index(rng, cap - 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(size);

  std::vector<std::size_t> images(pool);
  bool fixed_point = true;
  while (fixed_point) {
    std::shuffle(images.begin(), images.end(), rng);
    fixed_point = false;
    for (std::size_t i = 0; i < size; ++i) fixed_point |= images[i] == pool[i];
  }
  std::map<Label, Label> mapping;
  for (std::size_t i = 0; i < size; ++i) mapping.emplace(tree.label(pool[i]), tree.label(images[i]));
  return Permutation(std::move(mapping));
}

RandomInstance perturb(const LabelledTree& t1, std::size_t ops, Rng& rng,
                       const PerturbationOptions& options) {
  RandomInstance instance{t1, t1, {}};
  std::bernoulli_distribution pick_permutation(options.permutation_share);
  for (std::size_t i = 0; i < ops; ++i) {
    const LabelledTree& current = instance.t2;
    auto try_permutation = [&]() -> std::optional<Operation> {
      auto pi = random_permutation(current, rng, options.max_permutation_size, options.keep_root);
      if (pi.empty()) return std::nullopt;
      return Operation(std::move(pi));
    };
    auto try_move = [&]() -> std::optional<Operation> {
      if (auto move = random_linkcut(current, rng)) return Operation(std::move(*move));
      return std::nullopt;
    };
    std::optional<Operation> op;
    if (pick_permutation(rng)) {
      op = try_permutation();
      if (!op) op = try_move();
    } else {
      op = try_move();
      if (!op) op = try_permutation();
    }
    if (!op) continue;
    instance.t2 = apply_operation(current, *op);
    instance.applied.push_back(std::move(*op));
  }
  return instance;
}

RandomInstance random_instance(std::uint64_t seed, std::size_t n, std::size_t ops,
                               const PerturbationOptions& options) {
  Rng rng(seed);
  const LabelledTree t1 = random_recursive_tree(n, rng);
  return perturb(t1, ops, rng, options);
}

}  // namespace fltree
