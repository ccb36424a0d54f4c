#include "fltree/rearrangement.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <vector>

#include "fltree/error.hpp"
#include "fltree/linkcut.hpp"

namespace fltree {

const char* to_string(Method method) {
  switch (method) {
    case Method::Oracle: return "oracle";
    case Method::Fpt: return "fpt";
    case Method::Approx: return "approx";
  }
  return "unknown";
}

const char* to_string(CandidateSet candidates) {
  switch (candidates) {
    case CandidateSet::MovementVertices: return "vg";
    case CandidateSet::ActiveAndMovement: return "x";
    case CandidateSet::AllLabels: return "all";
  }
  return "unknown";
}

OperationSequence canonicalize_sequence(const OperationSequence& seq) {
  // Walk backwards carrying the composition of every permutation seen so far;
  // each move is rewritten through it.
  Permutation suffix;
  std::vector<LinkCutOp> moves;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (const auto* pi = std::get_if<Permutation>(&*it)) {
      suffix = pi->then(suffix);
    } else {
      const auto& op = std::get<LinkCutOp>(*it);
      moves.emplace_back(suffix(op.child()), suffix(op.from()), suffix(op.to()));
    }
  }
  OperationSequence out;
  if (!suffix.empty()) out.emplace_back(std::move(suffix));
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.emplace_back(std::move(*it));
  return out;
}

OperationSequence canonicalize_sequence(const LabelledTree& start, const OperationSequence& seq) {
  (void)replay(start, seq);
  return canonicalize_sequence(seq);
}

std::size_t sequence_size(const OperationSequence& seq) {
  std::size_t size = 0;
  for (const auto& op : canonicalize_sequence(seq)) {
    if (const auto* pi = std::get_if<Permutation>(&op)) {
      size += pi->size();
    } else {
      ++size;
    }
  }
  return size;
}

std::size_t sequence_size(const LabelledTree& start, const OperationSequence& seq) {
  (void)replay(start, seq);
  return sequence_size(seq);
}

std::size_t rearrangement_lower_bound(const LabelledTree& t1, const LabelledTree& t2) {
  return (family_partition_size(t1, t2) + 1) / 2;
}

namespace {

void require_same_labels(const LabelledTree& t1, const LabelledTree& t2) {
  if (!t1.same_labels(t2)) {
    throw Error(ErrorKind::LabelSetMismatch, "trees are not labelled by the same label set");
  }
}

// `image[x]` is the label index given to the t1 vertex labelled x.
Permutation permutation_from_images(const LabelledTree& t, const std::vector<std::size_t>& image) {
  std::map<Label, Label> mapping;
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x] != x) mapping.emplace(t.label(x), t.label(image[x]));
  }
  return Permutation(std::move(mapping));
}

RearrangementResult assemble(const LabelledTree& t1, const LabelledTree& t2,
                             const std::vector<std::size_t>& image, Method method) {
  RearrangementResult result;
  result.method = method;
  Permutation pi = permutation_from_images(t1, image);
  const LabelledTree permuted = apply_permutation(t1, pi);
  OperationSequence moves = linkcut_script(permuted, t2);
  result.distance = pi.size() + moves.size();
  if (!pi.empty()) result.witness.emplace_back(std::move(pi));
  for (auto& op : moves) result.witness.push_back(std::move(op));
  return result;
}

class BranchAndBound {
 public:
  BranchAndBound(const LabelledTree& t1, const LabelledTree& t2)
      : n_(t1.size()),
        p1_(t1.parents().begin(), t1.parents().end()),
        p2_(t2.parents().begin(), t2.parents().end()),
        image_(n_, kUnassigned),
        used_(n_, 0) {
    // Breadth-first order of t1: parents are assigned before their children.
    order_.push_back(t1.root());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (std::size_t c : t1.children(order_[i])) order_.push_back(c);
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    descend(0, 0);
    if (best_cost_ == kInfiniteCost) return std::nullopt;
    return best_image_;
  }

 private:
  static constexpr std::size_t kUnassigned = kVirtualRoot - 1;
  static constexpr std::size_t kInfiniteCost = kVirtualRoot;

  std::size_t image_of_parent(std::size_t x) const {
    return p1_[x] == kVirtualRoot ? kVirtualRoot : image_[p1_[x]];
  }

  // Every unassigned vertex that can no longer keep its own label in place
  // costs at least one more unit: either it moves, or it stays but ends up
  // under the wrong parent.
  std::size_t remaining_bound() const {
    std::size_t bound = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      if (image_[x] != kUnassigned) continue;
      if (used_[x]) {
        ++bound;
      } else if (const std::size_t parent = p1_[x];
                 parent == kVirtualRoot || image_[parent] != kUnassigned) {
        if (p2_[x] != image_of_parent(x)) ++bound;
      }
    }
    return bound;
  }

  void try_image(std::size_t depth, std::size_t x, std::size_t y, std::size_t cost) {
    const std::size_t target_parent = image_of_parent(x);
    if (p1_[x] == kVirtualRoot && p2_[y] != kVirtualRoot) return;  // roots would differ
    const std::size_t step = (y != x) + (p2_[y] != target_parent);
    image_[x] = y;
    used_[y] = 1;
    if (cost + step + remaining_bound() < best_cost_) descend(depth + 1, cost + step);
    image_[x] = kUnassigned;
    used_[y] = 0;
  }

  void descend(std::size_t depth, std::size_t cost) {
    if (depth == n_) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_image_ = image_;
      }
      return;
    }
    const std::size_t x = order_[depth];
    if (!used_[x]) try_image(depth, x, x, cost);
    for (std::size_t y = 0; y < n_; ++y) {
      if (y != x && !used_[y]) try_image(depth, x, y, cost);
    }
  }

  std::size_t n_;
  std::vector<std::size_t> p1_;
  std::vector<std::size_t> p2_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
  std::size_t best_cost_ = kInfiniteCost;
  std::vector<std::size_t> best_image_;
};

}  // namespace

RearrangementResult brute_force_distance(const LabelledTree& t1, const LabelledTree& t2,
                                         const OracleOptions& options) {
  require_same_labels(t1, t2);
  if (t1.size() > options.label_limit) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "exhaustive search is limited to " + std::to_string(options.label_limit) +
                    " labels, got " + std::to_string(t1.size()));
  }
  auto image = BranchAndBound(t1, t2).run();
  // Sending t1's root label onto t2's root label is always feasible.
  if (!image) throw Error(ErrorKind::InvalidArgument, "no feasible permutation");
  return assemble(t1, t2, *image, Method::Oracle);
}

namespace {

// Evaluates |pi| + linkcut_distance(pi(t1), t2) incrementally: only vertices
// whose label or whose parent's label changes can change their active state.
class PermutationEvaluator {
 public:
  PermutationEvaluator(const LabelledTree& t1, const LabelledTree& t2)
      : t1_(t1),
        p1_(t1.parents().begin(), t1.parents().end()),
        p2_(t2.parents().begin(), t2.parents().end()),
        root1_(t1.root()) {
    for (std::size_t x = 0; x < p1_.size(); ++x) base_active_ += p1_[x] != p2_[x];
  }

  std::size_t base_active() const { return base_active_; }
  bool roots_match() const { return p2_[root1_] == kVirtualRoot; }

  std::vector<std::size_t> affected(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> out(subset);
    for (std::size_t x : subset) {
      for (std::size_t c : t1_.children(x)) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Active count after applying `perm` (a full image array that differs from
  /// the identity only on the current subset); nullopt when the root label
  /// would change.
  std::optional<std::size_t> active_after(const std::vector<std::size_t>& perm,
                                          const std::vector<std::size_t>& affected) const {
    if (p2_[perm[root1_]] != kVirtualRoot) return std::nullopt;
    std::ptrdiff_t delta = 0;
    for (std::size_t x : affected) {
      const std::size_t parent = p1_[x];
      const std::size_t new_parent = parent == kVirtualRoot ? kVirtualRoot : perm[parent];
      delta += static_cast<std::ptrdiff_t>(p2_[perm[x]] != new_parent) -
               static_cast<std::ptrdiff_t>(p2_[x] != parent);
    }
    return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(base_active_) + delta);
  }

 private:
  const LabelledTree& t1_;
  std::vector<std::size_t> p1_;
  std::vector<std::size_t> p2_;
  std::size_t root1_;
  std::size_t base_active_ = 0;
};

std::vector<std::size_t> candidate_labels(const LabelledTree& t1, const LabelledTree& t2,
                                          CandidateSet which) {
  const std::size_t n = t1.size();
  std::vector<char> chosen(n, 0);
  if (which == CandidateSet::AllLabels) {
    std::fill(chosen.begin(), chosen.end(), 1);
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t u = t1.parent(v);
      const std::size_t w = t2.parent(v);
      if (u == w) continue;
      if (u != kVirtualRoot) chosen[u] = 1;
      if (w != kVirtualRoot) chosen[w] = 1;
      if (which == CandidateSet::ActiveAndMovement) chosen[v] = 1;
    }
    // The virtual root cannot be relabelled, so a root label mismatch can only
    // be repaired by permuting both root labels.
    if (t1.root() != t2.root()) chosen[t1.root()] = chosen[t2.root()] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (chosen[v]) out.push_back(v);
  }
  return out;
}

// All size-s subsets of `pool`, lexicographic.
std::vector<std::vector<std::size_t>> subsets_of_size(const std::vector<std::size_t>& pool,
                                                      std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  if (s > pool.size()) return out;
  std::vector<std::size_t> pick(s);
  for (std::size_t i = 0; i < s; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> subset(s);
    for (std::size_t i = 0; i < s; ++i) subset[i] = pool[pick[i]];
    out.push_back(std::move(subset));
    std::size_t i = s;
    while (i > 0 && pick[i - 1] == pool.size() - s + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

struct Candidate {
  std::size_t cost = kVirtualRoot;
  std::size_t subset_ordinal = 0;
  std::vector<std::size_t> images;  // image of subset[i]

  bool better_than(const Candidate& other) const {
    return std::tie(cost, subset_ordinal) < std::tie(other.cost, other.subset_ordinal);
  }
};

// Best derangement of every subset in `subsets`; first found wins ties.
Candidate search_level(const PermutationEvaluator& eval,
                       const std::vector<std::vector<std::size_t>>& subsets, std::size_t n,
                       std::size_t cost_limit, unsigned threads, std::size_t& evaluated) {
  std::atomic<std::size_t> bound{cost_limit};  // costs above this are discarded
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> counted{0};
  Candidate best;
  std::mutex best_mutex;

  auto worker = [&] {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Candidate local;
    std::size_t local_count = 0;
    for (std::size_t ordinal = next++; ordinal < subsets.size(); ordinal = next++) {
      const auto& subset = subsets[ordinal];
      const auto affected = eval.affected(subset);
      std::vector<std::size_t> images(subset);
      while (std::next_permutation(images.begin(), images.end())) {
        bool derangement = true;
        for (std::size_t i = 0; i < subset.size(); ++i) derangement &= images[i] != subset[i];
        if (!derangement) continue;
        for (std::size_t i = 0; i < subset.size(); ++i) perm[subset[i]] = images[i];
        ++local_count;
        const auto active = eval.active_after(perm, affected);
        for (std::size_t x : subset) perm[x] = x;
        if (!active) continue;
        const std::size_t cost = subset.size() + *active;
        if (cost > bound.load(std::memory_order_relaxed)) continue;
        Candidate found{cost, ordinal, images};
        if (found.better_than(local)) {
          local = std::move(found);
          std::size_t current = bound.load();
          while (cost < current && !bound.compare_exchange_weak(current, cost)) {
          }
        }
      }
    }
    counted += local_count;
    std::lock_guard lock(best_mutex);
    if (local.better_than(best)) best = std::move(local);
  };

  if (threads <= 1 || subsets.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  evaluated += counted;
  return best;
}

}  // namespace

FptOutcome fpt_distance(const LabelledTree& t1, const LabelledTree& t2, std::size_t k,
                        const FptOptions& options) {
  require_same_labels(t1, t2);
  FptOutcome outcome;
  outcome.partition_size = family_partition_size(t1, t2);
  if (outcome.partition_size > 2 * k) {
    outcome.rejected_by_partition_bound = true;
    return outcome;
  }

  const std::size_t n = t1.size();
  const PermutationEvaluator eval(t1, t2);
  const auto pool = candidate_labels(t1, t2, options.candidates);
  const std::size_t partition = outcome.partition_size;

  std::size_t best_cost = kVirtualRoot;
  std::vector<std::size_t> best_image;
  if (eval.roots_match()) {
    ++outcome.permutations_evaluated;
    if (eval.base_active() <= k) {
      best_cost = eval.base_active();
      best_image.resize(n);
      for (std::size_t i = 0; i < n; ++i) best_image[i] = i;
    }
  }

  for (std::size_t s = 2; s <= std::min(k, pool.size()); ++s) {
    if (s >= best_cost) break;  // every later permutation costs at least s
    // Any pi of size s leaves at least |P| - 2s partition classes, each
    // needing one move.
    const std::size_t floor = s + (partition > 2 * s ? partition - 2 * s : 0);
    const std::size_t limit = std::min(k, best_cost - 1);
    if (floor > limit) continue;
    const auto subsets = subsets_of_size(pool, s);
    const Candidate found =
        search_level(eval, subsets, n, limit, std::max(1u, options.threads),
                     outcome.permutations_evaluated);
    if (found.cost <= limit) {
      best_cost = found.cost;
      best_image.resize(n);
      for (std::size_t i = 0; i < n; ++i) best_image[i] = i;
      const auto& subset = subsets[found.subset_ordinal];
      for (std::size_t i = 0; i < subset.size(); ++i) best_image[subset[i]] = found.images[i];
    }
  }

  if (best_cost <= k) outcome.result = assemble(t1, t2, best_image, Method::Fpt);
  return outcome;
}

RearrangementResult approx_binary(const LabelledTree& t1, const LabelledTree& t2) {
  RearrangementResult result;
  result.method = Method::Approx;
  result.witness = linkcut_script(t1, t2);
  result.distance = result.witness.size();
  result.guaranteed = t1.max_children() <= 2;
  return result;
}

std::pair<std::size_t, std::size_t> partition_perturbation(const LabelledTree& t1,
                                                           const LabelledTree& t2,
                                                           const Permutation& pi) {
  return {family_partition_size(t1, t2), family_partition_size(apply_permutation(t1, pi), t2)};
}

Verification verify_sequence(const LabelledTree& t1, const OperationSequence& seq,
                             const LabelledTree& t2) {
  Verification v;
  if (!t1.same_labels(t2)) {
    v.diagnostic = "trees are not labelled by the same label set";
    return v;
  }
  try {
    const LabelledTree result = replay(t1, seq);
    if (!are_congruent(result, t2)) {
      v.diagnostic = "replay ends in " + serialize_tree(result) + ", not congruent to target";
      return v;
    }
  } catch (const Error& e) {
    v.diagnostic = std::string("replay rejected: ") + e.what();
    return v;
  }
  v.verified = true;
  return v;
}

}  // namespace fltree
