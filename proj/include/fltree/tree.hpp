#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fltree {

using Label = std::string;

/// Parent index of the child of the virtual root.
inline constexpr std::size_t kVirtualRoot = std::numeric_limits<std::size_t>::max();

/// True when `text` is usable as a vertex label: non-empty, no whitespace and
/// none of `(`, `)`, `,`, `;`.
bool is_valid_label(std::string_view text);

struct ParentLink {
  Label child;
  std::optional<Label> parent;  // nullopt for the child of the virtual root
};

/// A rooted tree whose vertices are in one-to-one correspondence with a label
/// set. Children are unordered; the tree exposes them in lexicographic label
/// order.
///
/// Vertices are identified by the position of their label in the sorted label
/// list, so two trees over the same label set share a vertex index space.
/// Instances are immutable once built.
class LabelledTree {
 public:
  /// Builds a tree from vertex labels and, for each vertex, the position of its
  /// parent in `labels` (kVirtualRoot for the child of the virtual root).
  static LabelledTree from_parent_positions(std::vector<Label> labels,
                                            std::span<const std::size_t> parent_positions);

  static LabelledTree from_links(std::span<const ParentLink> links);

  std::size_t size() const noexcept { return labels_.size(); }

  /// Labels in lexicographic order; the position of a label is its vertex index.
  std::span<const Label> labels() const noexcept { return labels_; }
  const Label& label(std::size_t vertex) const { return labels_[vertex]; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // throws UnknownLabel
  bool contains(std::string_view label) const { return find(label).has_value(); }

  /// The unique child of the virtual root.
  std::size_t root() const noexcept { return root_; }
  std::size_t parent(std::size_t vertex) const { return parent_[vertex]; }
  std::span<const std::size_t> parents() const noexcept { return parent_; }
  std::span<const std::size_t> children(std::size_t vertex) const { return children_[vertex]; }
  bool is_leaf(std::size_t vertex) const { return children_[vertex].empty(); }
  std::size_t max_children() const;

  /// True if `descendant` lies in the subtree rooted at `ancestor`
  /// (a vertex is its own descendant).
  bool is_descendant(std::size_t descendant, std::size_t ancestor) const;

  /// Vertices in depth-first order, children visited lexicographically.
  std::vector<std::size_t> preorder() const;
  std::vector<std::size_t> postorder() const;
  /// Distance from the child of the virtual root, per vertex.
  std::vector<std::size_t> depths() const;

  std::optional<Label> parent_label(std::string_view label) const;

  bool same_labels(const LabelledTree& other) const { return labels_ == other.labels_; }

 private:
  LabelledTree() = default;

  std::vector<Label> labels_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::size_t root_ = 0;
};

/// Parses the Newick-style format `((d,e,f)b,(g,h)c)a;` in which every node,
/// internal or leaf, carries a label. Children order is discarded.
LabelledTree parse_tree(std::string_view text);

/// Inverse of parse_tree; children are written in lexicographic label order.
std::string serialize_tree(const LabelledTree& tree);

/// Same label set and same parent for every label.
bool are_congruent(const LabelledTree& t1, const LabelledTree& t2);

}  // namespace fltree
