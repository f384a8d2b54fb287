#pragma once

#include <cstdint>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

struct RetractResult {
  MultiGraph graph;
  /// Original vertex -> surviving vertex index (merged classes share an
  /// index).
  std::vector<int> vertex_trace;
  /// Loops produced by contracting across an existing edge between the
  /// two neighbours are dropped; the count is kept for traceability.
  std::size_t deleted_loops = 0;
};

/// Contract the two edges at a degree-two vertex with distinct
/// neighbours, merging the three vertices into one.
MultiGraph bicontract(const MultiGraph& g, int v);

/// Bicontract the lowest-indexed eligible vertex until none remains or
/// only two vertices are left. The result is unique up to isomorphism
/// regardless of the order.
RetractResult retract_of(const MultiGraph& g);

/// Test-only mode: seeded random choice of the eligible vertex at every
/// step, for exercising order-independence.
RetractResult retract_of_random(const MultiGraph& g, std::uint64_t seed);

}  // namespace matchkit
