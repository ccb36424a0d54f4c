#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fltree/random.hpp"
#include "fltree/tree.hpp"

namespace fltree {

struct Triple {
  Label a;
  Label b;
  Label c;
};

/// A 3-dimensional matching instance over disjoint element sets A, B, C.
struct ThreeDMInstance {
  std::vector<Label> a;
  std::vector<Label> b;
  std::vector<Label> c;
  std::vector<Triple> triples;

  /// Throws InvalidInstance unless the sets are disjoint, every triple takes
  /// one element from each set, no element occurs in more than three triples
  /// and no two triples share more than one element.
  void validate() const;
};

/// Three header lines listing A, B and C (whitespace separated), then one
/// triple `a b c` per line. Blank lines after the header are ignored.
ThreeDMInstance parse_3dm_instance(std::string_view text);
std::string format_3dm_instance(const ThreeDMInstance& instance);

/// Label of the gadget leaf `index` (1 or 2) that triple `triple` hangs under
/// `element` in the first tree.
Label gadget_label(std::size_t triple, const Label& element, int index);

/// Tree pair of the 3DM hardness construction. Both trees have a vertex `r`
/// under the virtual root with every element of A, B, C as a child. For each
/// triple (a, b, c) the first tree hangs two gadget leaves under each of a, b
/// and c; the second tree hangs the leaves of a under b, those of b under c and
/// those of c under a. The movements graph therefore has one 3-cycle per triple.
std::pair<LabelledTree, LabelledTree> build_reduction(const ThreeDMInstance& instance);

/// 3n + 6(m - n). Throws InvalidArgument when n > m.
std::size_t reduction_bound(std::size_t m, std::size_t n);

/// Size of a maximum set of pairwise disjoint triples, by exhaustive search.
/// Throws SizeLimitExceeded above `triple_limit` triples.
std::size_t max_matching_bruteforce(const ThreeDMInstance& instance, std::size_t triple_limit = 12);

/// A random valid instance with up to `max_triples` triples over element sets
/// whose sizes add up to at most `max_elements` (each set non-empty).
ThreeDMInstance random_3dm_instance(Rng& rng, std::size_t max_triples, std::size_t max_elements);

}  // namespace fltree
