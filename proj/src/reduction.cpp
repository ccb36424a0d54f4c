#include "fltree/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fltree/error.hpp"

namespace fltree {

namespace {

const Label kReductionRoot = "r";

void invalid(const std::string& message) { throw Error(ErrorKind::InvalidInstance, message); }

std::size_t shared_elements(const Triple& x, const Triple& y) {
  return (x.a == y.a) + (x.b == y.b) + (x.c == y.c);
}

}  // namespace

void ThreeDMInstance::validate() const {
  std::set<Label> seen;
  auto add_set = [&](const std::vector<Label>& set, const char* name) {
    for (const auto& e : set) {
      if (!is_valid_label(e)) invalid(std::string("invalid element '") + e + "' in " + name);
      if (e == kReductionRoot) invalid("element name 'r' is reserved for the root");
      if (!seen.insert(e).second) invalid("element '" + e + "' appears twice or in two sets");
    }
  };
  add_set(a, "A");
  add_set(b, "B");
  add_set(c, "C");

  auto member = [](const std::vector<Label>& set, const Label& e) {
    return std::find(set.begin(), set.end(), e) != set.end();
  };
  std::map<Label, std::size_t> occurrences;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    if (!member(a, t.a) || !member(b, t.b) || !member(c, t.c)) {
      invalid("triple " + std::to_string(i) + " does not take one element from each of A, B, C");
    }
    for (const auto* e : {&t.a, &t.b, &t.c}) {
      if (++occurrences[*e] > 3) invalid("element '" + *e + "' occurs in more than three triples");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (shared_elements(t, triples[j]) > 1) {
        invalid("triples " + std::to_string(j) + " and " + std::to_string(i) +
                " share more than one element");
      }
    }
  }
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (const auto* e : {&triples[i].a, &triples[i].b, &triples[i].c}) {
      for (int k : {1, 2}) {
        if (seen.contains(gadget_label(i, *e, k))) {
          invalid("element name '" + gadget_label(i, *e, k) + "' collides with a gadget label");
        }
      }
    }
  }
}

ThreeDMInstance parse_3dm_instance(std::string_view text) {
  ThreeDMInstance instance;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Label>* headers[] = {&instance.a, &instance.b, &instance.c};
  std::size_t line_no = 0;
  for (auto* header : headers) {
    if (!std::getline(in, line)) invalid("expected three header lines listing A, B and C");
    ++line_no;
    std::istringstream words(line);
    for (std::string w; words >> w;) header->push_back(w);
  }
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> parts;
    for (std::string w; words >> w;) parts.push_back(w);
    if (parts.empty()) continue;
    if (parts.size() != 3) invalid("line " + std::to_string(line_no) + ": expected 'a b c'");
    instance.triples.push_back({parts[0], parts[1], parts[2]});
  }
  instance.validate();
  return instance;
}

std::string format_3dm_instance(const ThreeDMInstance& instance) {
  std::string out;
  for (const auto* set : {&instance.a, &instance.b, &instance.c}) {
    for (std::size_t i = 0; i < set->size(); ++i) out += (i ? " " : "") + (*set)[i];
    out += "\n";
  }
  for (const auto& t : instance.triples) out += t.a + " " + t.b + " " + t.c + "\n";
  return out;
}

Label gadget_label(std::size_t triple, const Label& element, int index) {
  return std::to_string(triple) + "_" + element + "_" + std::to_string(index);
}

std::pair<LabelledTree, LabelledTree> build_reduction(const ThreeDMInstance& instance) {
  instance.validate();
  std::vector<ParentLink> first{{kReductionRoot, std::nullopt}};
  for (const auto* set : {&instance.a, &instance.b, &instance.c}) {
    for (const auto& e : *set) first.push_back({e, kReductionRoot});
  }
  std::vector<ParentLink> second = first;
  for (std::size_t i = 0; i < instance.triples.size(); ++i) {
    const auto& t = instance.triples[i];
    const std::pair<const Label*, const Label*> shifts[] = {{&t.a, &t.b}, {&t.b, &t.c}, {&t.c, &t.a}};
    for (const auto& [owner, next] : shifts) {
      for (int k : {1, 2}) {
        const Label leaf = gadget_label(i, *owner, k);
        first.push_back({leaf, *owner});
        second.push_back({leaf, *next});
      }
    }
  }
  return {LabelledTree::from_links(first), LabelledTree::from_links(second)};
}

std::size_t reduction_bound(std::size_t m, std::size_t n) {
  if (n > m) throw Error(ErrorKind::InvalidArgument, "matching size exceeds the number of triples");
  return 3 * n + 6 * (m - n);
}

std::size_t max_matching_bruteforce(const ThreeDMInstance& instance, std::size_t triple_limit) {
  const std::size_t m = instance.triples.size();
  if (m > triple_limit) {
    throw Error(ErrorKind::SizeLimitExceeded, "exhaustive matching is limited to " +
                                                  std::to_string(triple_limit) + " triples");
  }
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::set<Label> used;
    bool disjoint = true;
    std::size_t count = 0;
    for (std::size_t i = 0; i < m && disjoint; ++i) {
      if (!(mask >> i & 1)) continue;
      const auto& t = instance.triples[i];
      for (const auto* e : {&t.a, &t.b, &t.c}) disjoint &= used.insert(*e).second;
      ++count;
    }
    if (disjoint) best = std::max(best, count);
  }
  return best;
}

ThreeDMInstance random_3dm_instance(Rng& rng, std::size_t max_triples, std::size_t max_elements) {
  if (max_elements < 3) throw Error(ErrorKind::InvalidArgument, "need at least one element per set");
  auto draw = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t total = draw(3, max_elements);
  std::size_t sizes[3] = {1, 1, 1};
  for (std::size_t i = 3; i < total; ++i) ++sizes[draw(0, 2)];

  ThreeDMInstance instance;
  const char* prefixes[] = {"a", "b", "c"};
  std::vector<Label>* sets[] = {&instance.a, &instance.b, &instance.c};
  for (int s = 0; s < 3; ++s) {
    for (std::size_t i = 1; i <= sizes[s]; ++i) sets[s]->push_back(prefixes[s] + std::to_string(i));
  }

  const std::size_t wanted = draw(0, max_triples);
  for (int attempt = 0; attempt < 64 && instance.triples.size() < wanted; ++attempt) {
    Triple t{instance.a[draw(0, sizes[0] - 1)], instance.b[draw(0, sizes[1] - 1)],
             instance.c[draw(0, sizes[2] - 1)]};
    instance.triples.push_back(t);
    try {
      instance.validate();
    } catch (const Error&) {
      instance.triples.pop_back();
    }
  }
  return instance;
}

}  // namespace fltree
