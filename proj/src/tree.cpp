#include "fltree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "fltree/error.hpp"

namespace fltree {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::DuplicateLabel: return "duplicate-label";
    case ErrorKind::EmptyLabel: return "empty-label";
    case ErrorKind::InvalidLabel: return "invalid-label";
    case ErrorKind::UnknownLabel: return "unknown-label";
    case ErrorKind::InvalidTree: return "invalid-tree";
    case ErrorKind::InvalidOperation: return "invalid-operation";
    case ErrorKind::WrongParent: return "wrong-parent";
    case ErrorKind::DescendantTarget: return "descendant-target";
    case ErrorKind::NonBijective: return "non-bijective";
    case ErrorKind::LabelSetMismatch: return "label-set-mismatch";
    case ErrorKind::RootMismatch: return "root-mismatch";
    case ErrorKind::NotIsomorphic: return "not-isomorphic";
    case ErrorKind::SizeLimitExceeded: return "size-limit-exceeded";
    case ErrorKind::InvalidInstance: return "invalid-instance";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

namespace {

bool is_separator(char c) {
  return c == '(' || c == ')' || c == ',' || c == ';' || c == ' ' || c == '\t' ||
         c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

bool is_valid_label(std::string_view text) {
  return !text.empty() && std::none_of(text.begin(), text.end(), is_separator);
}

LabelledTree LabelledTree::from_parent_positions(std::vector<Label> labels,
                                                 std::span<const std::size_t> parent_positions) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::InvalidTree, "a tree needs at least one vertex");
  if (parent_positions.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "one parent position is needed per label");
  }
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorKind::EmptyLabel, "empty label");
    if (!is_valid_label(l)) throw Error(ErrorKind::InvalidLabel, "invalid label '" + l + "'");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    rank[order[i]] = i;
    if (i > 0 && labels[order[i]] == labels[order[i - 1]]) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate label '" + labels[order[i]] + "'");
    }
  }

  LabelledTree tree;
  tree.labels_.resize(n);
  tree.parent_.assign(n, kVirtualRoot);
  tree.children_.resize(n);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = rank[i];
    tree.labels_[v] = std::move(labels[i]);
    const std::size_t p = parent_positions[i];
    if (p == kVirtualRoot) {
      tree.root_ = v;
      ++roots;
    } else if (p >= n) {
      throw Error(ErrorKind::InvalidArgument, "parent position out of range");
    } else {
      tree.parent_[v] = rank[p];
    }
  }
  if (roots != 1) {
    throw Error(ErrorKind::InvalidTree,
                "exactly one vertex must hang from the virtual root, found " +
                    std::to_string(roots));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (tree.parent_[v] != kVirtualRoot) tree.children_[tree.parent_[v]].push_back(v);
  }
  // Vertices were visited in index order, so every child list is already sorted.

  std::vector<std::size_t> stack{tree.root_};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t c : tree.children_[v]) stack.push_back(c);
  }
  if (reached != n) throw Error(ErrorKind::InvalidTree, "parent relation contains a cycle");
  return tree;
}

LabelledTree LabelledTree::from_links(std::span<const ParentLink> links) {
  std::vector<Label> labels;
  labels.reserve(links.size());
  for (const auto& link : links) labels.push_back(link.child);

  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  auto position_of = [&](const Label& l) -> std::size_t {
    auto it = std::lower_bound(order.begin(), order.end(), l,
                               [&](std::size_t i, const Label& x) { return labels[i] < x; });
    if (it == order.end() || labels[*it] != l) {
      throw Error(ErrorKind::UnknownLabel, "unknown parent label '" + l + "'");
    }
    return *it;
  };

  std::vector<std::size_t> parents(links.size(), kVirtualRoot);
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (links[i].parent) parents[i] = position_of(*links[i].parent);
  }
  return from_parent_positions(std::move(labels), parents);
}

std::optional<std::size_t> LabelledTree::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const Label& a, std::string_view b) { return a < b; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t LabelledTree::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorKind::UnknownLabel, "unknown label '" + std::string(label) + "'");
}

std::size_t LabelledTree::max_children() const {
  std::size_t best = 0;
  for (const auto& c : children_) best = std::max(best, c.size());
  return best;
}

bool LabelledTree::is_descendant(std::size_t descendant, std::size_t ancestor) const {
  for (std::size_t v = descendant; v != kVirtualRoot; v = parent_[v]) {
    if (v == ancestor) return true;
  }
  return false;
}

std::vector<std::size_t> LabelledTree::preorder() const {
  std::vector<std::size_t> order;
  order.reserve(size());
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& ch = children_[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<std::size_t> LabelledTree::postorder() const {
  std::vector<std::size_t> order;
  order.reserve(size());
  // (vertex, next child to descend into)
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children_[v].size()) {
      const std::size_t c = children_[v][next++];
      stack.emplace_back(c, 0);
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }
  return order;
}

std::vector<std::size_t> LabelledTree::depths() const {
  std::vector<std::size_t> depth(size(), 0);
  for (std::size_t v : preorder()) {
    if (parent_[v] != kVirtualRoot) depth[v] = depth[parent_[v]] + 1;
  }
  return depth;
}

std::optional<Label> LabelledTree::parent_label(std::string_view label) const {
  const std::size_t p = parent_[index_of(label)];
  if (p == kVirtualRoot) return std::nullopt;
  return labels_[p];
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Iterative so that path-like trees of any depth parse without recursion.
class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LabelledTree parse() {
    std::vector<std::vector<std::size_t>> open;  // children collected per open '('
    std::vector<std::size_t> closed_children;
    enum class State { ExpectNode, ExpectLabel, AfterNode, Done } state = State::ExpectNode;
    std::size_t last_node = 0;

    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      const char c = text_[pos_];
      switch (state) {
        case State::ExpectNode:
          if (c == '(') {
            open.emplace_back();
            ++pos_;
          } else if (is_separator(c)) {
            fail(ErrorKind::EmptyLabel, "expected a node label");
          } else {
            last_node = add_node({});
            state = State::AfterNode;
          }
          break;
        case State::ExpectLabel:
          if (is_separator(c)) fail(ErrorKind::EmptyLabel, "internal node without a label");
          last_node = add_node(std::move(closed_children));
          closed_children.clear();
          state = State::AfterNode;
          break;
        case State::AfterNode:
          if (c == ',') {
            if (open.empty()) fail(ErrorKind::Syntax, "',' outside of parentheses");
            open.back().push_back(last_node);
            ++pos_;
            state = State::ExpectNode;
          } else if (c == ')') {
            if (open.empty()) fail(ErrorKind::Syntax, "unbalanced ')'");
            open.back().push_back(last_node);
            closed_children = std::move(open.back());
            open.pop_back();
            ++pos_;
            state = State::ExpectLabel;
          } else if (c == ';') {
            if (!open.empty()) fail(ErrorKind::Syntax, "';' before all parentheses are closed");
            ++pos_;
            state = State::Done;
          } else {
            fail(ErrorKind::Syntax, std::string("unexpected '") + c + "'");
          }
          break;
        case State::Done:
          fail(ErrorKind::Syntax, "trailing characters after ';'");
      }
    }
    if (state != State::Done) fail(ErrorKind::Syntax, "unexpected end of input, expected ';'");

    parents_[last_node] = kVirtualRoot;
    return LabelledTree::from_parent_positions(std::move(labels_), parents_);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::size_t add_node(std::vector<std::size_t> children) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_separator(text_[pos_])) ++pos_;
    const std::size_t id = labels_.size();
    labels_.emplace_back(text_.substr(start, pos_ - start));
    if (!seen_.insert(labels_.back()).second) {
      throw ParseError(ErrorKind::DuplicateLabel, start, "duplicate label '" + labels_.back() + "'");
    }
    parents_.push_back(kVirtualRoot);
    for (std::size_t c : children) parents_[c] = id;
    return id;
  }

  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const {
    throw ParseError(kind, pos_, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Label> labels_;
  std::unordered_set<std::string> seen_;
  std::vector<std::size_t> parents_;
};

}  // namespace

LabelledTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string serialize_tree(const LabelledTree& tree) {
  std::string out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto children = tree.children(v);
    if (next == 0 && !children.empty()) out.push_back('(');
    if (next < children.size()) {
      if (next > 0) out.push_back(',');
      const std::size_t c = children[next++];
      stack.emplace_back(c, 0);
      continue;
    }
    if (!children.empty()) out.push_back(')');
    out += tree.label(v);
    stack.pop_back();
  }
  out.push_back(';');
  return out;
}

bool are_congruent(const LabelledTree& t1, const LabelledTree& t2) {
  if (!t1.same_labels(t2)) return false;
  return std::equal(t1.parents().begin(), t1.parents().end(), t2.parents().begin());
}

}  // namespace fltree
