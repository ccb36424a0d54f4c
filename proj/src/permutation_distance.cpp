#include "fltree/permutation_distance.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "fltree/error.hpp"
#include "fltree/matching.hpp"

namespace fltree {

namespace {

void require_same_labels(const LabelledTree& t1, const LabelledTree& t2) {
  if (!t1.same_labels(t2)) {
    throw Error(ErrorKind::LabelSetMismatch, "trees are not labelled by the same label set");
  }
}

}  // namespace

MismatchTable::MismatchTable(const LabelledTree& t1, const LabelledTree& t2)
    : t1_(&t1), t2_(&t2), iso_((require_same_labels(t1, t2), t1), t2) {
  const std::size_t classes = iso_.code_count();
  std::vector<std::vector<std::size_t>> members1(classes), members2(classes);
  for (std::size_t u = 0; u < t1.size(); ++u) members1[iso_.code1(u)].push_back(u);
  for (std::size_t v = 0; v < t2.size(); ++v) members2[iso_.code2(v)].push_back(v);

  position1_.resize(t1.size());
  position2_.resize(t2.size());
  class_size2_.resize(classes);
  block_offset_.resize(classes + 1, 0);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t i = 0; i < members1[c].size(); ++i) position1_[members1[c][i]] = i;
    for (std::size_t j = 0; j < members2[c].size(); ++j) position2_[members2[c][j]] = j;
    class_size2_[c] = members2[c].size();
    block_offset_[c + 1] = block_offset_[c] + members1[c].size() * members2[c].size();
  }
  costs_.assign(block_offset_[classes], kInfiniteCost);

  // A shape code is interned only after the codes of all its children, so
  // increasing code order is a valid bottom-up evaluation order.
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t u : members1[c]) {
      for (std::size_t v : members2[c]) costs_[slot(u, v)] = compute(u, v);
    }
  }
}

std::size_t MismatchTable::slot(std::size_t u, std::size_t v) const {
  const std::size_t c = iso_.code1(u);
  return block_offset_[c] + position1_[u] * class_size2_[c] + position2_[v];
}

std::size_t MismatchTable::cost(std::size_t u, std::size_t v) const {
  if (!iso_.isomorphic(u, v)) return kInfiniteCost;
  return costs_[slot(u, v)];
}

std::size_t MismatchTable::compute(std::size_t u, std::size_t v) const {
  // Same label set, so equal vertex indices mean equal labels.
  std::size_t total = u == v ? 0 : 1;
  for (const auto& [x, y] : matching(u, v)) total += costs_[slot(x, y)];
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> MismatchTable::matching(std::size_t u,
                                                                         std::size_t v) const {
  if (!iso_.isomorphic(u, v)) {
    throw Error(ErrorKind::NotIsomorphic, "subtrees of '" + t1_->label(u) + "' and '" +
                                              t2_->label(v) + "' are not isomorphic");
  }
  // Children sorted by (shape code, vertex); runs of equal code line up
  // between two isomorphic vertices.
  std::vector<std::pair<std::size_t, std::size_t>> left, right, pairs;
  for (std::size_t x : t1_->children(u)) left.emplace_back(iso_.code1(x), x);
  for (std::size_t y : t2_->children(v)) right.emplace_back(iso_.code2(y), y);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());

  std::vector<std::int64_t> block;
  std::size_t begin = 0;
  while (begin < left.size()) {
    std::size_t end = begin;
    while (end < left.size() && left[end].first == left[begin].first) ++end;
    const std::size_t k = end - begin;
    if (k == 1) {
      pairs.emplace_back(left[begin].second, right[begin].second);
    } else {
      block.assign(k * k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          block[i * k + j] =
              static_cast<std::int64_t>(costs_[slot(left[begin + i].second, right[begin + j].second)]);
        }
      }
      const auto assignment = min_cost_assignment(block, k);
      for (std::size_t i = 0; i < k; ++i) {
        pairs.emplace_back(left[begin + i].second, right[begin + assignment.column_of_row[i]].second);
      }
    }
    begin = end;
  }
  return pairs;
}

std::set<Label> MismatchTable::conserved(std::size_t u, std::size_t v) const {
  std::set<Label> kept;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{u, v}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) kept.insert(t1_->label(x));
    for (const auto& child_pair : matching(x, y)) stack.push_back(child_pair);
  }
  return kept;
}

std::vector<std::size_t> MismatchTable::optimal_isomorphism() const {
  std::vector<std::size_t> image(t1_->size(), kVirtualRoot);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{t1_->root(), t2_->root()}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    image[x] = y;
    for (const auto& child_pair : matching(x, y)) stack.push_back(child_pair);
  }
  return image;
}

MismatchTable mismatch_table(const LabelledTree& t1, const LabelledTree& t2) {
  return MismatchTable(t1, t2);
}

std::size_t permutation_distance(const LabelledTree& t1, const LabelledTree& t2) {
  const MismatchTable table(t1, t2);
  if (!table.isomorphism().trees_isomorphic()) {
    throw Error(ErrorKind::NotIsomorphic, "permutation distance is undefined: trees are not isomorphic");
  }
  return table.cost(t1.root(), t2.root());
}

Permutation optimal_permutation(const LabelledTree& t1, const LabelledTree& t2) {
  const MismatchTable table(t1, t2);
  if (!table.isomorphism().trees_isomorphic()) {
    throw Error(ErrorKind::NotIsomorphic, "permutation distance is undefined: trees are not isomorphic");
  }
  std::map<Label, Label> mapping;
  const auto image = table.optimal_isomorphism();
  for (std::size_t u = 0; u < image.size(); ++u) {
    if (image[u] != u) mapping.emplace(t1.label(u), t2.label(image[u]));
  }
  return Permutation(std::move(mapping));
}

}  // namespace fltree
