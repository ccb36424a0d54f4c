#include "fltree/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace fltree {

namespace {

std::vector<std::vector<std::size_t>> by_depth(const LabelledTree& t) {
  const auto depth = t.depths();
  std::size_t levels = 0;
  for (auto d : depth) levels = std::max(levels, d + 1);
  std::vector<std::vector<std::size_t>> out(levels);
  for (std::size_t v = 0; v < t.size(); ++v) out[levels - 1 - depth[v]].push_back(v);
  return out;
}

}  // namespace

IsomorphismTable::IsomorphismTable(const LabelledTree& t1, const LabelledTree& t2)
    : code1_(t1.size()), code2_(t2.size()), size1_(t1.size(), 1),
      root1_(t1.root()), root2_(t2.root()) {
  levels1_ = by_depth(t1);
  const auto levels2 = by_depth(t2);

  // One dictionary for all levels, so codes stay comparable between vertices
  // at different depths.
  std::map<std::vector<std::size_t>, std::size_t> dictionary;
  std::vector<std::size_t> key;
  auto encode = [&](const LabelledTree& t, std::size_t v, std::vector<std::size_t>& codes) {
    key.clear();
    for (std::size_t c : t.children(v)) key.push_back(codes[c]);
    std::sort(key.begin(), key.end());
    auto [it, inserted] = dictionary.try_emplace(key, dictionary.size());
    codes[v] = it->second;
  };

  // Both trees move up together; level d of t1 is encoded alongside level d of t2.
  const std::size_t depth1 = levels1_.size();
  const std::size_t depth2 = levels2.size();
  const std::size_t deepest = std::max(depth1, depth2);
  for (std::size_t d = deepest; d-- > 0;) {
    if (d < depth1) {
      for (std::size_t v : levels1_[depth1 - 1 - d]) {
        encode(t1, v, code1_);
        for (std::size_t c : t1.children(v)) size1_[v] += size1_[c];
      }
    }
    if (d < depth2) {
      for (std::size_t v : levels2[depth2 - 1 - d]) encode(t2, v, code2_);
    }
  }
  code_count_ = dictionary.size();
}

IsomorphismTable subtree_isomorphism_table(const LabelledTree& t1, const LabelledTree& t2) {
  return IsomorphismTable(t1, t2);
}

bool are_isomorphic(const LabelledTree& t1, const LabelledTree& t2) {
  return t1.size() == t2.size() && IsomorphismTable(t1, t2).trees_isomorphic();
}

}  // namespace fltree
