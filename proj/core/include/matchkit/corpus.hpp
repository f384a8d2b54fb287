#pragma once

#include <cstdint>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// All connected simple graphs on exactly n vertices, one representative
/// per isomorphism class, in a deterministic order. Built by vertex
/// augmentation from the (n-1)-vertex classes with isomorph rejection.
/// Practical for n <= 9 or so.
std::vector<MultiGraph> all_connected_graphs(int n);

/// Isomorphism-invariant fingerprint (colour refinement). Equal for
/// isomorphic graphs; collisions between non-isomorphic graphs are
/// resolved by are_isomorphic wherever it matters.
std::uint64_t invariant_fingerprint(const MultiGraph& g);

}  // namespace matchkit
