#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "fltree/operations.hpp"
#include "fltree/tree.hpp"

namespace fltree {

enum class Method { Oracle, Fpt, Approx };

const char* to_string(Method method);

struct RearrangementResult {
  std::size_t distance = 0;
  /// One leading permutation (omitted when empty) followed by link-and-cut
  /// moves. Replaying it on t1 yields a tree congruent to t2.
  OperationSequence witness;
  Method method = Method::Oracle;
  /// For Method::Approx: whether t1 is binary, i.e. whether
  /// distance <= 4 * optimum is guaranteed. Always true otherwise.
  bool guaranteed = true;
};

/// Moves every permutation to the front: a move <v: u -> w> followed by pi
/// becomes pi followed by <pi(v): pi(u) -> pi(w)>, then all permutations are
/// composed into one. The result has the same effect as `seq` on any tree it
/// can be replayed on.
OperationSequence canonicalize_sequence(const OperationSequence& seq);
/// As above, but first checks that `seq` replays from `start`.
OperationSequence canonicalize_sequence(const LabelledTree& start, const OperationSequence& seq);

/// Size of the composed permutation of the canonical form plus its number of
/// link-and-cut moves.
std::size_t sequence_size(const OperationSequence& seq);
std::size_t sequence_size(const LabelledTree& start, const OperationSequence& seq);

/// ceil(|P| / 2) where |P| is family_partition_size; no sequence turning t1
/// into t2 is smaller.
std::size_t rearrangement_lower_bound(const LabelledTree& t1, const LabelledTree& t2);

struct OracleOptions {
  std::size_t label_limit = 8;
};

/// Exact rearrangement distance: the minimum over every permutation pi of the
/// full label set of |pi| + linkcut_distance(pi(t1), t2), where a pi that
/// leaves different root labels is infeasible.
///
/// The enumeration assigns images vertex by vertex in breadth-first order of
/// t1 and discards partial assignments whose cost plus an admissible bound
/// already reaches the best complete one, so the minimum is the same as for a
/// plain enumeration of all |L|! permutations. Throws SizeLimitExceeded above
/// `label_limit` labels.
RearrangementResult brute_force_distance(const LabelledTree& t1, const LabelledTree& t2,
                                         const OracleOptions& options = {});

enum class CandidateSet {
  MovementVertices,   // vertices of the movements graph
  ActiveAndMovement,  // active set plus the movements-graph vertices
  AllLabels,          // every label: exhaustive up to the budget
};

const char* to_string(CandidateSet candidates);

struct FptOptions {
  CandidateSet candidates = CandidateSet::MovementVertices;
  unsigned threads = 1;
};

struct FptOutcome {
  /// Empty when the distance exceeds the budget (within the candidate set).
  std::optional<RearrangementResult> result;
  std::size_t partition_size = 0;
  bool rejected_by_partition_bound = false;
  std::size_t permutations_evaluated = 0;
};

/// Bounded search for d(t1, t2) <= k. Rejects at once when |P| > 2k;
/// otherwise enumerates permutations of at most k candidate labels, by
/// increasing size then lexicographically, each moving every label it
/// touches, and keeps the first one minimising |pi| + linkcut_distance.
/// The outcome does not depend on `threads`.
FptOutcome fpt_distance(const LabelledTree& t1, const LabelledTree& t2, std::size_t k,
                        const FptOptions& options = {});

/// Link-and-cut distance with its script. When t1 is binary the value is at
/// most four times the rearrangement distance. Throws RootMismatch /
/// LabelSetMismatch like linkcut_distance.
RearrangementResult approx_binary(const LabelledTree& t1, const LabelledTree& t2);

/// (family_partition_size(t1, t2), family_partition_size(pi(t1), t2)).
std::pair<std::size_t, std::size_t> partition_perturbation(const LabelledTree& t1,
                                                           const LabelledTree& t2,
                                                           const Permutation& pi);

struct Verification {
  bool verified = false;
  std::string diagnostic;

  explicit operator bool() const noexcept { return verified; }
};

/// Replays `seq` on t1 and checks the result is congruent to t2. Never throws;
/// failures are described in `diagnostic`.
Verification verify_sequence(const LabelledTree& t1, const OperationSequence& seq,
                             const LabelledTree& t2);

}  // namespace fltree
