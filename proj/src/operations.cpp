#include "fltree/operations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "fltree/error.hpp"

namespace fltree {

LinkCutOp::LinkCutOp(Label child, Label from, Label to)
    : child_(std::move(child)), from_(std::move(from)), to_(std::move(to)) {
  if (child_ == from_ || child_ == to_ || from_ == to_) {
    throw Error(ErrorKind::InvalidOperation,
                "link-and-cut needs three distinct labels: " + child_ + " " + from_ + " " + to_);
  }
}

Permutation::Permutation(std::map<Label, Label> mapping) {
  std::set<Label> images;
  for (auto& [from, to] : mapping) {
    if (from == to) continue;
    images.insert(to);
    mapping_.emplace(from, to);
  }
  if (images.size() != mapping_.size()) {
    throw Error(ErrorKind::NonBijective, "two labels are sent to the same image");
  }
  for (const auto& image : images) {
    if (!mapping_.contains(image)) {
      throw Error(ErrorKind::NonBijective,
                  "label '" + image + "' is an image but is not itself moved");
    }
  }
}

const Label& Permutation::operator()(const Label& label) const {
  auto it = mapping_.find(label);
  return it == mapping_.end() ? label : it->second;
}

Permutation Permutation::inverse() const {
  std::map<Label, Label> inv;
  for (const auto& [from, to] : mapping_) inv.emplace(to, from);
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  std::map<Label, Label> composed;
  for (const auto& [from, to] : mapping_) composed[from] = next(to);
  for (const auto& [from, to] : next.mapping_) {
    if (!mapping_.contains(from)) composed[from] = to;
  }
  return Permutation(std::move(composed));
}

namespace {

// Mutable working copy used while replaying: vertex identity is the original
// label index, labels move between vertices under permutations.
class ReplayState {
 public:
  explicit ReplayState(const LabelledTree& tree)
      : tree_(tree),
        parent_(tree.parents().begin(), tree.parents().end()),
        label_at_(tree.size()),
        vertex_of_(tree.size()) {
    for (std::size_t v = 0; v < tree.size(); ++v) label_at_[v] = vertex_of_[v] = v;
  }

  void apply(const LinkCutOp& op) {
    const std::size_t v = vertex(op.child());
    const std::size_t u = vertex(op.from());
    const std::size_t w = vertex(op.to());
    if (parent_[v] != u) {
      throw Error(ErrorKind::WrongParent,
                  "'" + op.from() + "' is not the parent of '" + op.child() + "'");
    }
    for (std::size_t x = w; x != kVirtualRoot; x = parent_[x]) {
      if (x == v) {
        throw Error(ErrorKind::DescendantTarget,
                    "'" + op.to() + "' is a descendant of '" + op.child() + "'");
      }
    }
    parent_[v] = w;
  }

  void apply(const Permutation& pi) {
    std::vector<std::pair<std::size_t, std::size_t>> moves;  // (vertex, new label index)
    for (const auto& [from, to] : pi.mapping()) {
      const std::size_t from_label = label_index(from);
      moves.emplace_back(vertex_of_[from_label], label_index(to));
    }
    for (auto [v, l] : moves) {
      label_at_[v] = l;
      vertex_of_[l] = v;
    }
  }

  LabelledTree finish() const {
    const std::size_t n = parent_.size();
    std::vector<Label> labels(n);
    std::vector<std::size_t> parents(n, kVirtualRoot);
    for (std::size_t v = 0; v < n; ++v) {
      labels[v] = tree_.label(label_at_[v]);
      parents[v] = parent_[v];
    }
    return LabelledTree::from_parent_positions(std::move(labels), parents);
  }

 private:
  std::size_t label_index(const Label& label) const { return tree_.index_of(label); }
  std::size_t vertex(const Label& label) const { return vertex_of_[label_index(label)]; }

  const LabelledTree& tree_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> label_at_;
  std::vector<std::size_t> vertex_of_;
};

}  // namespace

LabelledTree apply_linkcut(const LabelledTree& tree, const LinkCutOp& op) {
  ReplayState state(tree);
  state.apply(op);
  return state.finish();
}

LabelledTree apply_permutation(const LabelledTree& tree, const Permutation& pi) {
  ReplayState state(tree);
  state.apply(pi);
  return state.finish();
}

LabelledTree apply_operation(const LabelledTree& tree, const Operation& op) {
  return replay(tree, OperationSequence{op});
}

LabelledTree replay(const LabelledTree& tree, const OperationSequence& seq) {
  ReplayState state(tree);
  for (const auto& op : seq) std::visit([&](const auto& o) { state.apply(o); }, op);
  return state.finish();
}

std::string format_operation(const Operation& op) {
  if (const auto* lc = std::get_if<LinkCutOp>(&op)) {
    return "move " + lc->child() + " " + lc->from() + " " + lc->to();
  }
  std::string line = "perm";
  for (const auto& [from, to] : std::get<Permutation>(op).mapping()) {
    line += " " + from + ">" + to;
  }
  return line;
}

std::string format_script(const OperationSequence& seq) {
  std::string out;
  for (const auto& op : seq) out += format_operation(op) + "\n";
  return out;
}

OperationSequence parse_script(std::string_view text) {
  OperationSequence seq;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string line(text.substr(line_start, line_end - line_start));
    std::istringstream words(line);
    std::string keyword;
    if (words >> keyword && keyword[0] != '#') {
      if (keyword == "move") {
        std::string child, from, to, extra;
        if (!(words >> child >> from >> to) || (words >> extra)) {
          throw ParseError(ErrorKind::Syntax, line_start, "expected 'move CHILD FROM TO'");
        }
        seq.emplace_back(LinkCutOp(child, from, to));
      } else if (keyword == "perm") {
        std::map<Label, Label> mapping;
        std::string pair;
        while (words >> pair) {
          const auto gt = pair.find('>');
          if (gt == std::string::npos || gt == 0 || gt + 1 == pair.size()) {
            throw ParseError(ErrorKind::Syntax, line_start, "expected 'old>new', got '" + pair + "'");
          }
          if (!mapping.emplace(pair.substr(0, gt), pair.substr(gt + 1)).second) {
            throw ParseError(ErrorKind::NonBijective, line_start,
                             "label '" + pair.substr(0, gt) + "' mapped twice");
          }
        }
        seq.emplace_back(Permutation(std::move(mapping)));
      } else {
        throw ParseError(ErrorKind::Syntax, line_start, "unknown operation '" + keyword + "'");
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return seq;
}

}  // namespace fltree
