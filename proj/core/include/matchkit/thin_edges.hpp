#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/retract.hpp"

namespace matchkit {

struct ThinEdgeReport {
  int edge_id = -1;
  /// The retract of g - e is a brick (requires g - e matching covered;
  /// otherwise the retract is undefined and the edge is not thin).
  bool thin = false;
  /// Host simple, edge thin, and the retract of g - e simple.
  bool strictly_thin = false;
  /// Present iff strictly thin: 0 both ends noncubic, 1 one end cubic,
  /// 2 both cubic outside a triangle, 3 both cubic in a triangle.
  std::optional<int> index;
  /// Retract of g - e, when g - e is matching covered.
  std::optional<MultiGraph> retract_after_deletion;
};

ThinEdgeReport is_thin_edge(const MultiGraph& g, int edge_id);

/// Lowest-id strictly thin edge of a simple brick, or absent. Absence
/// certifies membership in the Norine-Thomas families.
std::optional<int> find_strictly_thin_edge(const MultiGraph& g);

/// Structural facts about deleting a strictly thin edge: the degree-two
/// vertex count of g - e and the contraction-vertex degrees of the
/// retract, per the index of e.
bool index_structure_check(const MultiGraph& g, int edge_id);

struct ReductionStep {
  MultiGraph graph;
  int deleted_edge;
  int index;
};

struct ReductionTrace {
  /// steps[0].graph is the input; each following graph is the retract
  /// of the previous one minus its deleted edge. Empty when the input
  /// is already a terminal.
  std::vector<ReductionStep> steps;
  MultiGraph terminal;
  std::string family_label;
};

/// Repeatedly delete the lowest-id strictly thin edge and take the
/// retract until a Norine-Thomas brick remains. ReductionStuck signals
/// a terminal matching no family, which indicates a defect.
ReductionTrace reduce_to_norine_thomas(const MultiGraph& g);

/// Label a simple brick with its Norine-Thomas family, if any.
std::optional<std::string> norine_thomas_label(const MultiGraph& g);

}  // namespace matchkit
