#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fltree/matching.hpp"
#include "oracles.hpp"

using fltree::min_cost_assignment;

namespace {

std::int64_t total(const std::vector<std::int64_t>& costs, std::size_t n,
                   const std::vector<std::size_t>& column_of_row) {
  std::int64_t sum = 0;
  for (std::size_t r = 0; r < n; ++r) sum += costs[r * n + column_of_row[r]];
  return sum;
}

}  // namespace

TEST_CASE("empty and single assignments") {
  CHECK(min_cost_assignment({}, 0).cost == 0);
  const std::vector<std::int64_t> one{7};
  const auto a = min_cost_assignment(one, 1);
  CHECK(a.cost == 7);
  CHECK(a.column_of_row == std::vector<std::size_t>{0});
}

TEST_CASE("known small instance") {
  const std::vector<std::int64_t> costs{4, 1, 3,  //
                                        2, 0, 5,  //
                                        3, 2, 2};
  const auto a = min_cost_assignment(costs, 3);
  CHECK(a.cost == 5);
  CHECK(a.column_of_row == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("ties resolve to the identity on a constant matrix") {
  const std::vector<std::int64_t> costs(16, 1);
  const auto a = min_cost_assignment(costs, 4);
  CHECK(a.cost == 4);
  CHECK(a.column_of_row == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("property: optimum equals exhaustive search") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 1 + i % 7;
    std::uniform_int_distribution<std::int64_t> cost(0, i % 3 == 0 ? 2 : 50);
    std::vector<std::int64_t> costs(n * n);
    for (auto& c : costs) c = cost(rng);
    const auto a = min_cost_assignment(costs, n);
    REQUIRE(a.column_of_row.size() == n);
    CHECK(std::set<std::size_t>(a.column_of_row.begin(), a.column_of_row.end()).size() == n);
    CHECK(total(costs, n, a.column_of_row) == a.cost);
    CHECK(a.cost == oracle::brute_assignment(costs, n));
  }
}
