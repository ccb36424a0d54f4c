#include "fltree/matching.hpp"

#include <algorithm>
#include <limits>

#include "fltree/error.hpp"

namespace fltree {

Assignment min_cost_assignment(std::span<const std::int64_t> costs, std::size_t n) {
  if (costs.size() != n * n) throw Error(ErrorKind::InvalidArgument, "cost matrix must be n x n");
  Assignment result;
  if (n == 0) return result;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based; index 0 of the column arrays is a virtual column used to start
  // each augmentation.
  std::vector<std::int64_t> row_pot(n + 1, 0), col_pot(n + 1, 0), slack(n + 1);
  std::vector<std::size_t> row_of_col(n + 1, 0), prev_col(n + 1, 0);
  std::vector<char> visited(n + 1);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    std::size_t col = 0;
    std::fill(slack.begin(), slack.end(), kInf);
    std::fill(visited.begin(), visited.end(), 0);
    do {
      visited[col] = 1;
      const std::size_t r = row_of_col[col];
      std::int64_t delta = kInf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        const std::int64_t reduced = costs[(r - 1) * n + (j - 1)] - row_pot[r] - col_pot[j];
        if (reduced < slack[j]) {
          slack[j] = reduced;
          prev_col[j] = col;
        }
        if (slack[j] < delta) {
          delta = slack[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (visited[j]) {
          row_pot[row_of_col[j]] += delta;
          col_pot[j] -= delta;
        } else {
          slack[j] -= delta;
        }
      }
      col = next;
    } while (row_of_col[col] != 0);
    // Flip the augmenting path.
    do {
      const std::size_t prev = prev_col[col];
      row_of_col[col] = row_of_col[prev];
      col = prev;
    } while (col != 0);
  }

  result.column_of_row.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = row_of_col[j] - 1;
    result.column_of_row[r] = j - 1;
    result.cost += costs[r * n + (j - 1)];
  }
  return result;
}

}  // namespace fltree
