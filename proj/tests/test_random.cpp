#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fltree/random.hpp"
#include "fltree/rearrangement.hpp"
#include "support.hpp"

using namespace fltree;

TEST_CASE("random recursive trees") {
  Rng rng(71);
  for (std::size_t n = 1; n <= 60; ++n) {
    const auto t = random_recursive_tree(n, rng);
    CHECK(t.size() == n);
    CHECK(t.contains("v1"));
    CHECK(t.contains("v" + std::to_string(n)));
    const auto binary = random_recursive_tree(n, rng, 2);
    CHECK(binary.max_children() <= 2);
    const auto chain = random_recursive_tree(n, rng, 1);
    CHECK(chain.max_children() <= 1);
  }
  CHECK(support::error_kind([&] { random_recursive_tree(0, rng); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("trees over the same labels") {
  Rng rng(72);
  for (int i = 0; i < 100; ++i) {
    const auto t = random_recursive_tree(1 + i % 20, rng);
    const auto u = random_tree_over(t, rng, true);
    CHECK(u.same_labels(t));
    CHECK(u.root() == t.root());
  }
}

TEST_CASE("random operations are legal") {
  Rng rng(73);
  for (int i = 0; i < 300; ++i) {
    const auto t = random_recursive_tree(1 + i % 15, rng);
    const auto op = random_linkcut(t, rng);
    CHECK(op.has_value() == (t.size() >= 3));
    if (op) CHECK(!support::error_kind([&] { apply_linkcut(t, *op); }));
    const auto pi = random_permutation(t, rng, 4, true);
    CHECK(pi.size() <= 4);
    CHECK(pi(t.label(t.root())) == t.label(t.root()));
    for (const auto& [from, to] : pi.mapping()) CHECK(from != to);
  }
}

TEST_CASE("zero operations give congruent trees") {
  const auto inst = random_instance(5, 30, 0);
  CHECK(are_congruent(inst.t1, inst.t2));
  CHECK(inst.applied.empty());
}

TEST_CASE("instances are reproducible from the seed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_instance(seed, 25, 6);
    const auto b = random_instance(seed, 25, 6);
    CHECK(serialize_tree(a.t1) == serialize_tree(b.t1));
    CHECK(serialize_tree(a.t2) == serialize_tree(b.t2));
    CHECK(format_script(a.applied) == format_script(b.applied));
  }
  CHECK(serialize_tree(random_instance(1, 25, 6).t1) != serialize_tree(random_instance(2, 25, 6).t1));
}

TEST_CASE("property: the applied sequence replays to the second tree") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    PerturbationOptions options;
    options.permutation_share = static_cast<double>(seed % 5) / 4.0;
    options.keep_root = seed % 2 == 0;
    const auto inst = random_instance(seed, 1 + seed % 30, seed % 9, options);
    CHECK(verify_sequence(inst.t1, inst.applied, inst.t2).verified);
    if (options.keep_root) CHECK(inst.t1.root() == inst.t2.root());
  }
}
