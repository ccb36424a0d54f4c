#pragma once

// Slow, obviously-correct reference implementations. None of them calls the
// library algorithms they are compared against; they only read the parent
// arrays of the input trees.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "fltree/operations.hpp"
#include "fltree/random.hpp"
#include "fltree/tree.hpp"

namespace oracle {

using fltree::LabelledTree;
using fltree::kVirtualRoot;

using Parents = std::vector<std::size_t>;

inline Parents parents_of(const LabelledTree& t) { return {t.parents().begin(), t.parents().end()}; }

inline std::vector<std::vector<std::size_t>> children_of(const Parents& parent) {
  std::vector<std::vector<std::size_t>> children(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] != kVirtualRoot) children[parent[v]].push_back(v);
  }
  return children;
}

// Unlabelled rooted isomorphism of t1|u and t2|v, trying every bijection of
// the children.
inline bool isomorphic(const std::vector<std::vector<std::size_t>>& c1, std::size_t u,
                       const std::vector<std::vector<std::size_t>>& c2, std::size_t v) {
  if (c1[u].size() != c2[v].size()) return false;
  std::vector<std::size_t> order(c2[v].size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool all = true;
    for (std::size_t i = 0; i < order.size() && all; ++i) {
      all = isomorphic(c1, c1[u][i], c2, c2[v][order[i]]);
    }
    if (all) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

inline bool isomorphic(const LabelledTree& t1, std::size_t u, const LabelledTree& t2, std::size_t v) {
  return isomorphic(children_of(parents_of(t1)), u, children_of(parents_of(t2)), v);
}

inline bool is_ancestor_or_self(const Parents& parent, std::size_t ancestor, std::size_t v) {
  for (std::size_t x = v; x != kVirtualRoot; x = parent[x]) {
    if (x == ancestor) return true;
  }
  return false;
}

// Fewest single link-and-cut moves from t1 to t2, by breadth-first search over
// parent arrays. Requires the same label set; nullopt when t2 is unreachable.
inline std::optional<std::size_t> bfs_linkcut(const LabelledTree& t1, const LabelledTree& t2) {
  const Parents start = parents_of(t1);
  const Parents goal = parents_of(t2);
  const std::size_t n = start.size();
  std::map<Parents, std::size_t> dist{{start, 0}};
  std::deque<Parents> queue{start};
  while (!queue.empty()) {
    Parents cur = queue.front();
    queue.pop_front();
    const std::size_t d = dist[cur];
    if (cur == goal) return d;
    for (std::size_t v = 0; v < n; ++v) {
      if (cur[v] == kVirtualRoot) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == cur[v] || is_ancestor_or_self(cur, v, w)) continue;
        Parents next = cur;
        next[v] = w;
        if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

// For a relabelling sigma (vertex x of t1 receives the label of vertex
// sigma[x]), the number of vertices of sigma(t1) whose parent differs from t2.
// The caller guarantees sigma maps the root of t1 to the root of t2.
inline std::size_t misplaced(const Parents& p1, const Parents& p2, const std::vector<std::size_t>& sigma) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < p1.size(); ++x) {
    const std::size_t want = p1[x] == kVirtualRoot ? kVirtualRoot : sigma[p1[x]];
    count += p2[sigma[x]] != want;
  }
  return count;
}

inline std::size_t moved(const std::vector<std::size_t>& sigma) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < sigma.size(); ++x) count += sigma[x] != x;
  return count;
}

// Minimum |pi| over every relabelling pi with pi(t1) congruent to t2.
inline std::optional<std::size_t> exhaustive_permutation_distance(const LabelledTree& t1,
                                                                  const LabelledTree& t2) {
  const Parents p1 = parents_of(t1), p2 = parents_of(t2);
  std::vector<std::size_t> sigma(p1.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::optional<std::size_t> best;
  do {
    if (sigma[t1.root()] != t2.root() || misplaced(p1, p2, sigma) != 0) continue;
    const std::size_t cost = moved(sigma);
    if (!best || cost < *best) best = cost;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

// min over all relabellings pi of |pi| + (link-and-cut distance of pi(t1), t2),
// where the link-and-cut distance is read off as the number of misplaced
// parents. Plain enumeration of all |L|! relabellings.
inline std::size_t plain_rearrangement(const LabelledTree& t1, const LabelledTree& t2) {
  const Parents p1 = parents_of(t1), p2 = parents_of(t2);
  std::vector<std::size_t> sigma(p1.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  do {
    if (sigma[t1.root()] != t2.root()) continue;
    best = std::min(best, moved(sigma) + misplaced(p1, p2, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

inline std::int64_t brute_assignment(const std::vector<std::int64_t>& costs, std::size_t n) {
  std::vector<std::size_t> col(n);
  std::iota(col.begin(), col.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t total = 0;
    for (std::size_t r = 0; r < n; ++r) total += costs[r * n + col[r]];
    best = std::min(best, total);
  } while (std::next_permutation(col.begin(), col.end()));
  return n == 0 ? 0 : best;
}

// t relabelled by a uniformly random bijection of its whole label set.
inline LabelledTree shuffled(const LabelledTree& t, fltree::Rng& rng) {
  std::vector<fltree::Label> images(t.labels().begin(), t.labels().end());
  std::shuffle(images.begin(), images.end(), rng);
  std::map<fltree::Label, fltree::Label> mapping;
  for (std::size_t v = 0; v < t.size(); ++v) mapping.emplace(t.label(v), images[v]);
  return fltree::apply_permutation(t, fltree::Permutation(std::move(mapping)));
}

}  // namespace oracle
