#pragma once

#include <unordered_map>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// A perfect matching as a sorted set of edge ids covering every vertex
/// of the host graph exactly once.
struct PerfectMatching {
  std::vector<int> edge_ids;
};

/// True iff g has a perfect matching. The empty graph is matchable.
bool is_matchable(const MultiGraph& g);

/// True iff g minus the two given vertices is matchable.
bool is_matchable_without(const MultiGraph& g, int a, int b);

/// Complete, duplicate-free list of perfect matchings. Deterministic
/// order: branch on the lowest-index uncovered vertex, its incident
/// edges by ascending edge id. Raises BudgetExhausted when truncated.
std::vector<PerfectMatching> enumerate_perfect_matchings(
    const MultiGraph& g, std::size_t budget = kDefaultBudget);

/// Connected, order >= 2, and every edge lies in some perfect matching.
bool is_matching_covered(const MultiGraph& g);

/// True iff g minus the given vertex set is matchable.
bool is_conformal(const MultiGraph& g, const std::vector<int>& vertex_set);

/// True iff `m` is a perfect matching of g.
bool is_perfect_matching(const MultiGraph& g, const PerfectMatching& m);

/// Cycles of the symmetric difference of two perfect matchings.
/// The symmetric difference of two perfect matchings is a disjoint
/// union of even cycles; they are returned ordered by smallest
/// contained vertex, each in canonical orientation.
std::vector<CycleSeq> symmetric_difference_cycles(const MultiGraph& g,
                                                  const PerfectMatching& m1,
                                                  const PerfectMatching& m2);

/// Memoised matchability of induced subgraphs, keyed by the alive
/// vertex mask. One instance per host graph; not thread-safe.
class SubsetMatcher {
 public:
  explicit SubsetMatcher(const MultiGraph& g) : g_(g) {}

  bool matchable(const Bits& alive);

 private:
  const MultiGraph& g_;
  std::unordered_map<Bits, bool, BitsHash> memo_;
};

}  // namespace matchkit
