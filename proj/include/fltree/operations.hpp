#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fltree/tree.hpp"

namespace fltree {

/// Moves `child` from parent `from` to parent `to`. Whether the move is legal
/// depends on the tree it is applied to and is checked there.
class LinkCutOp {
 public:
  LinkCutOp(Label child, Label from, Label to);  // throws InvalidOperation

  const Label& child() const noexcept { return child_; }
  const Label& from() const noexcept { return from_; }
  const Label& to() const noexcept { return to_; }

  LinkCutOp inverse() const { return {child_, to_, from_}; }

  friend bool operator==(const LinkCutOp&, const LinkCutOp&) = default;

 private:
  Label child_;
  Label from_;
  Label to_;
};

/// A relabelling stored as explicit old -> new pairs. Fixed points are never
/// stored, so size() is the number of labels the permutation moves.
class Permutation {
 public:
  Permutation() = default;
  /// Drops identity pairs; throws NonBijective if the remaining pairs do not
  /// form a bijection on their own domain.
  explicit Permutation(std::map<Label, Label> mapping);

  std::size_t size() const noexcept { return mapping_.size(); }
  bool empty() const noexcept { return mapping_.empty(); }
  const std::map<Label, Label>& mapping() const noexcept { return mapping_; }

  /// Image of `label`; labels outside the stored domain map to themselves.
  const Label& operator()(const Label& label) const;

  Permutation inverse() const;
  /// `this` followed by `next`: label -> next(this(label)).
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::map<Label, Label> mapping_;
};

using Operation = std::variant<LinkCutOp, Permutation>;
using OperationSequence = std::vector<Operation>;

/// Throws UnknownLabel, WrongParent or DescendantTarget when the move is not
/// legal on `tree`.
LabelledTree apply_linkcut(const LabelledTree& tree, const LinkCutOp& op);

/// Throws UnknownLabel if the permutation mentions a label absent from `tree`.
LabelledTree apply_permutation(const LabelledTree& tree, const Permutation& pi);

LabelledTree apply_operation(const LabelledTree& tree, const Operation& op);

/// Replays `seq` from `tree`, rejecting the first illegal operation with the
/// same errors as the single-operation functions.
LabelledTree replay(const LabelledTree& tree, const OperationSequence& seq);

/// One operation per line: `move CHILD FROM TO` or `perm a>b b>a ...`.
/// Blank lines and lines starting with '#' are ignored when parsing.
std::string format_operation(const Operation& op);
std::string format_script(const OperationSequence& seq);
OperationSequence parse_script(std::string_view text);

}  // namespace fltree
