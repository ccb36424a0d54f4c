#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fltree {

struct Assignment {
  std::vector<std::size_t> column_of_row;
  std::int64_t cost = 0;
};

/// Minimum-weight perfect matching of a complete bipartite graph given as an
/// n x n row-major cost matrix. Shortest augmenting paths with vertex
/// potentials, O(n^3). Among equal-cost columns the lowest index is taken
/// first, so the result is deterministic.
Assignment min_cost_assignment(std::span<const std::int64_t> costs, std::size_t n);

}  // namespace fltree
