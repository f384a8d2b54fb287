#pragma once

#include <optional>
#include <string>

#include "matchkit/bicycle.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/retract.hpp"

namespace matchkit {

enum class FamilyVariant {
  K2Multi,
  K33,
  K4Multi,
  OddWheelMultiSpokes,
  K4SpliceK33,
  MurtyMulti,
};

const char* family_variant_name(FamilyVariant v);

struct FamilyTag {
  FamilyVariant variant;
  int k = 0;             // odd wheel parameter, when applicable
  IsoWitness witness;    // maps the classified graph onto `canonical`
  MultiGraph canonical;  // constructor output with matching multiplicities
};

/// Matches a matching covered graph of minimum degree three or more (or
/// order two) against the six family shapes, multiplicity rules
/// included: K2 any multiplicity; K3,3 simple; K4 with no two disjoint
/// parallel pairs; odd wheels of order six or more with multiple spokes
/// only; the cubic K4/K3,3 splice simple; the Murty graph with extra
/// multiplicity only between its two noncubic vertices.
std::optional<FamilyTag> classify_family(const MultiGraph& g);

struct Decision {
  bool both_properties = false;
  std::optional<FamilyTag> positive_certificate;         // on the retract
  std::optional<ConformalBicycle> negative_certificate;  // on g itself
  RetractResult retract_used;
  bool witness_omitted = false;  // negative witness skipped or over budget
};

/// Polynomial-time decision of "Birkhoff-von Neumann and PM-compact"
/// via retract plus family matching. Negative certificates come from
/// the exponential oracle and can be skipped (`want_witness = false`)
/// or lost to the budget, in which case `witness_omitted` is set.
Decision decide_structural(const MultiGraph& g, bool want_witness = true,
                           std::size_t budget = kDefaultBudget);

/// Brick special case: both properties hold iff the brick matches K4,
/// an odd wheel, or the Murty shape (multiplicity rules as above).
bool decide_brick_structural(const MultiGraph& g);

}  // namespace matchkit
