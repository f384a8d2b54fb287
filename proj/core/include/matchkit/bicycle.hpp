#pragma once

#include <optional>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

enum class Parity { Odd, Even };

/// Certificate of non-membership in the Birkhoff-von Neumann or
/// PM-compact class: two vertex-disjoint cycles of equal parity whose
/// removal leaves a perfectly matchable remainder.
struct ConformalBicycle {
  CycleSeq cycle1;
  CycleSeq cycle2;
  PerfectMatching complement_matching;  // matches g - V(cycle1) - V(cycle2)
  Parity parity;
};

/// Re-validates a certificate from raw graph data only: genuine
/// disjoint cycles, equal parity consistent with the tag (mixed parity
/// is rejected), complement matching exact.
bool validate_bicycle(const MultiGraph& g, const ConformalBicycle& b);

/// Search for a conformal bicycle of the requested parity. Absence
/// means the search was exhaustive. Deterministic: cycles are ranked by
/// (length, canonical encoding) and the first valid pair in that order
/// wins. The budget caps both cycle enumeration and conformality
/// checks; BudgetExhausted signals a truncated search.
std::optional<ConformalBicycle> find_conformal_bicycle(
    const MultiGraph& g, ParityWant want, std::size_t budget = kDefaultBudget);

struct OracleDecision {
  bool verdict;  // property holds: no forbidden bicycle exists
  std::optional<ConformalBicycle> witness;
};

/// Birkhoff-von Neumann test: no odd conformal bicycle.
OracleDecision decide_bvn_oracle(const MultiGraph& g,
                                 std::size_t budget = kDefaultBudget);

/// PM-compactness test: no even conformal bicycle. Uses the
/// matching-pair shortcut: an even bicycle exists iff some pair of
/// perfect matchings has a symmetric difference with two or more
/// cycles; the certificate is assembled from such a pair.
OracleDecision decide_pmc_oracle(const MultiGraph& g,
                                 std::size_t budget = kDefaultBudget);

struct OracleClassification {
  bool bvn;
  bool pmc;
  std::optional<ConformalBicycle> odd_witness;
  std::optional<ConformalBicycle> even_witness;
};

OracleClassification classify_oracle(const MultiGraph& g,
                                     std::size_t budget = kDefaultBudget);

}  // namespace matchkit
