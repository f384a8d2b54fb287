#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

/// Every perfect matching meets the cut in exactly one edge.
bool is_tight_cut(const MultiGraph& g, const Cut& c);

/// Deterministic first nontrivial tight cut: candidate shores by odd
/// cardinality ascending, lexicographic within a cardinality.
std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g);

/// Every nontrivial tight cut, in the deterministic search order.
std::vector<Cut> all_nontrivial_tight_cuts(const MultiGraph& g);

/// Given a 2-edge nontrivial tight cut of a matching covered graph with
/// minimum degree >= 3, produces a nontrivial tight cut with at least
/// four edges by swapping one shore endpoint for the opposite
/// boundary's far endpoint.
Cut widen_two_edge_tight_cut(const MultiGraph& g, const Cut& c);

/// Contraction of everything outside `keep` into one fresh vertex (the
/// largest index of the result). Records parent vertex -> child vertex
/// (contracted vertices map to the contraction vertex) and the parent
/// edge id of each surviving edge.
struct Contraction {
  MultiGraph graph;
  std::vector<int> vertex_map;
  std::vector<int> parent_edge_ids;
  int contraction_vertex = -1;
};

Contraction contract_to_shore(const MultiGraph& g, const std::vector<int>& keep);

/// The two C-contractions (G / co-shore, G / shore) of a nontrivial cut.
std::pair<MultiGraph, MultiGraph> c_contractions(const MultiGraph& g, const Cut& c);

enum class LeafKind { Brick, Brace };

struct DecompositionNode {
  MultiGraph graph;
  // Relabelling from the parent node (empty at the root).
  std::vector<int> vertex_map_from_parent;
  std::vector<int> parent_edge_ids;
  std::optional<Cut> cut;  // present at internal nodes
  std::unique_ptr<DecompositionNode> shore_child;
  std::unique_ptr<DecompositionNode> co_shore_child;
  std::optional<LeafKind> leaf;
};

struct DecompositionTree {
  std::unique_ptr<DecompositionNode> root;
};

struct BInvariant {
  int value = 0;  // number of brick leaves
};

/// Tight cut decomposition using the deterministic first cut at every
/// node. The leaf list is canonical up to isomorphism of underlying
/// simple graphs; the tree shape itself is a deterministic
/// implementation choice.
std::pair<DecompositionTree, BInvariant> tight_cut_decomposition(
    const MultiGraph& g);

/// Test-only mode: picks a seeded-random nontrivial tight cut at every
/// node, for exercising invariance of the leaf list.
std::pair<DecompositionTree, BInvariant> tight_cut_decomposition_random(
    const MultiGraph& g, std::uint64_t seed);

std::vector<const DecompositionNode*> decomposition_leaves(
    const DecompositionTree& tree);

/// Edmonds-Lovasz-Pulleyblank test: order >= 4 and g - u - v connected
/// and matchable for every vertex pair.
bool is_brick(const MultiGraph& g);

/// Bipartite and free of nontrivial tight cuts.
bool is_brace(const MultiGraph& g);

/// b(g) == 1.
bool is_near_brick(const MultiGraph& g);

}  // namespace matchkit
