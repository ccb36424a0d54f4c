#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fltree/linkcut.hpp"
#include "fltree/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fltree;
using support::error_kind;
using support::move;

namespace {

using Key = std::pair<Label, Label>;

// Random pair over one label set with the same root label.
std::pair<LabelledTree, LabelledTree> comparable_pair(Rng& rng, std::size_t n) {
  const auto t1 = random_recursive_tree(n, rng);
  return {t1, random_tree_over(t1, rng, true)};
}

}  // namespace

TEST_CASE("active set") {
  const auto t1 = support::first(), t2 = support::second();
  CHECK(active_set(t1, t2) == std::set<Label>{"b", "d", "e", "f"});
  CHECK(active_set(t1, t1).empty());
  CHECK(error_kind([&] { active_set(t1, parse_tree("((b,e)d,(g,f,x)c)a;")); }) ==
        ErrorKind::LabelSetMismatch);
  CHECK(error_kind([&] { active_set(t1, parse_tree("((b,e)d,(g,f,h)a)c;")); }) ==
        ErrorKind::RootMismatch);
}

TEST_CASE("family partition") {
  const auto t1 = support::first(), t2 = support::second();
  const auto p = family_partition(t1, t2);
  const std::map<Key, std::set<Label>> expected{
      {{"a", "d"}, {"b"}}, {{"b", "a"}, {"d"}}, {{"b", "d"}, {"e"}}, {{"b", "c"}, {"f"}}};
  CHECK(p.groups == expected);
  CHECK(p.size() == 4);
  CHECK(family_partition_size(t1, t2) == 4);
  CHECK(family_partition(t1, t1).size() == 0);

  const auto u1 = parse_tree("((d,e)b,c)a;"), u2 = parse_tree("((d,e)c,b)a;");
  const auto q = family_partition(u1, u2);
  CHECK(q.groups == std::map<Key, std::set<Label>>{{{"b", "c"}, {"d", "e"}}});
  CHECK(linkcut_distance(u1, u2) == 2);
}

TEST_CASE("family partition size counts the virtual root as a parent") {
  // Same labels, different roots: a moves under b, b moves under the virtual root.
  const auto t1 = parse_tree("(b,c)a;"), t2 = parse_tree("(a,c)b;");
  CHECK(family_partition_size(t1, t2) == 3);
  CHECK(error_kind([&] { family_partition(t1, t2); }) == ErrorKind::RootMismatch);
}

TEST_CASE("link-and-cut distance") {
  const auto t1 = support::first(), t2 = support::second();
  CHECK(linkcut_distance(t1, t2) == 4);
  CHECK(linkcut_distance(t1, t1) == 0);
  CHECK(linkcut_distance(parse_tree("x;"), parse_tree("x;")) == 0);
}

TEST_CASE("link-and-cut script follows the depth-first order") {
  const auto t1 = support::first(), t2 = support::second();
  const OperationSequence expected{move("d", "b", "a"), move("e", "b", "d"), move("f", "b", "c"),
                                   move("b", "a", "d")};
  const auto script = linkcut_script(t1, t2);
  CHECK(script == expected);
  CHECK(are_congruent(replay(t1, script), t2));
  CHECK(linkcut_script(t1, t1).empty());
}

TEST_CASE("movements graph") {
  const auto g = movements_graph(support::first(), support::second());
  CHECK(g.edges == std::set<Key>{{"a", "d"}, {"b", "a"}, {"b", "d"}, {"b", "c"}});
  CHECK(g.vertices == std::set<Label>{"a", "b", "c", "d"});
  const auto t = support::first();
  const auto empty = movements_graph(t, t);
  CHECK(empty.edges.empty());
  CHECK(empty.vertices.empty());
}

TEST_CASE("property: script length, replay and wellposedness") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto [t1, t2] = comparable_pair(rng, 1 + i % 40);
    const auto script = linkcut_script(t1, t2);
    CHECK(script.size() == linkcut_distance(t1, t2));
    CHECK(script.size() == active_set(t1, t2).size());
    // replay throws DescendantTarget or WrongParent on an illegal move
    LabelledTree end = t1;
    CHECK(!error_kind([&] { end = replay(t1, script); }));
    CHECK(are_congruent(end, t2));
  }
}

TEST_CASE("property: partition classes cover the active set") {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const auto [t1, t2] = comparable_pair(rng, 1 + i % 30);
    const auto p = family_partition(t1, t2);
    std::set<Label> covered;
    std::size_t total = 0;
    for (const auto& [key, members] : p.groups) {
      CHECK(!members.empty());
      CHECK(key.first != key.second);
      for (const auto& v : members) {
        CHECK(*t1.parent_label(v) == key.first);
        CHECK(*t2.parent_label(v) == key.second);
      }
      total += members.size();
      covered.insert(members.begin(), members.end());
    }
    CHECK(total == covered.size());
    CHECK(covered == active_set(t1, t2));
    CHECK(family_partition_size(t1, t2) == p.size());
    const auto g = movements_graph(t1, t2);
    CHECK(g.edges.size() == p.size());
  }
}

TEST_CASE("property: symmetry and triangle inequality") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto t1 = random_recursive_tree(1 + i % 25, rng);
    const auto t2 = random_tree_over(t1, rng, true);
    const auto t3 = random_tree_over(t1, rng, true);
    CHECK(linkcut_distance(t1, t2) == linkcut_distance(t2, t1));
    CHECK(linkcut_distance(t1, t3) <= linkcut_distance(t1, t2) + linkcut_distance(t2, t3));
  }
}

TEST_CASE("property: distance equals breadth-first minimum on small trees") {
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const auto [t1, t2] = comparable_pair(rng, 1 + i % 6);
    const auto expected = oracle::bfs_linkcut(t1, t2);
    REQUIRE(expected.has_value());
    CHECK(linkcut_distance(t1, t2) == *expected);
  }
}
