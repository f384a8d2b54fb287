#pragma once

#include <nlohmann/json.hpp>

#include "matchkit/bicycle.hpp"
#include "matchkit/polytope.hpp"
#include "matchkit/recognizer.hpp"
#include "matchkit/thin_edges.hpp"
#include "matchkit/tight_cut.hpp"

namespace matchkit {

using nlohmann::json;

json bicycle_to_json(const ConformalBicycle& b);
ConformalBicycle bicycle_from_json(const json& j);

json matching_to_json(const PerfectMatching& m);

json edge_vector_to_json(const EdgeVector& x);
EdgeVector edge_vector_from_json(const MultiGraph& g, const json& j);

json decomposition_to_json(const DecompositionNode& node);
json skeleton_to_json(const SkeletonGraph& sk);
json reduction_trace_to_json(const ReductionTrace& t);
json family_tag_to_json(const FamilyTag& tag);
json decision_to_json(const Decision& d);

/// FNV-1a digest of the normalised graph encoding, for report headers.
std::string graph_digest(const MultiGraph& g);

}  // namespace matchkit
