#include "matchkit/tight_cut.hpp"

#include <algorithm>
#include <random>

namespace matchkit {

namespace {

std::vector<Bits> matching_edge_masks(const MultiGraph& g) {
  std::vector<Bits> masks;
  for (const PerfectMatching& m : enumerate_perfect_matchings(g)) {
    Bits b(g.m());
    for (int id : m.edge_ids) b.set(id);
    masks.push_back(std::move(b));
  }
  return masks;
}

bool tight_against(const MultiGraph& g, const std::vector<Bits>& pm_masks,
                   const std::vector<int>& shore) {
  Bits boundary(g.m());
  std::vector<char> in(g.n(), 0);
  for (int v : shore) in[v] = 1;
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    if (in[e.u] != in[e.v]) boundary.set(id);
  }
  for (const Bits& m : pm_masks)
    if (m.count_and(boundary) != 1) return false;
  return true;
}

// Visits odd-cardinality shores by size ascending, lexicographic within
// a size. When both shores have equal size, only the one containing
// vertex 0 is visited so each cut appears once.
template <typename Fn>
void visit_candidate_shores(int n, Fn&& fn) {
  for (int k = 3; k <= n - 3; k += 2) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (!(2 * k == n && idx[0] != 0)) {
        if (!fn(idx)) return;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

std::optional<Cut> first_tight_cut_impl(const MultiGraph& g,
                                        const std::vector<Bits>& pm_masks) {
  std::optional<Cut> found;
  visit_candidate_shores(g.n(), [&](const std::vector<int>& shore) {
    if (tight_against(g, pm_masks, shore)) {
      found = cut_of(g, shore);
      return false;
    }
    return true;
  });
  return found;
}

using CutChooser =
    std::optional<Cut> (*)(const MultiGraph&, const std::vector<Bits>&, void*);

void decompose_rec(DecompositionNode& node, CutChooser choose, void* state) {
  std::vector<Bits> pm_masks = matching_edge_masks(node.graph);
  std::optional<Cut> cut = choose(node.graph, pm_masks, state);
  if (!cut) {
    node.leaf = node.graph.is_bipartite() ? LeafKind::Brace : LeafKind::Brick;
    return;
  }
  node.cut = *cut;
  Contraction keep_shore = contract_to_shore(node.graph, cut->shore);
  Contraction keep_co = contract_to_shore(node.graph, cut->co_shore);
  // Both C-contractions of a nontrivial tight cut stay matching covered.
  require(is_matching_covered(keep_shore.graph) &&
              is_matching_covered(keep_co.graph),
          ErrorCode::PreconditionViolated,
          "C-contraction lost the matching covered property; cut was not tight");
  node.shore_child = std::make_unique<DecompositionNode>();
  node.shore_child->graph = keep_shore.graph;
  node.shore_child->vertex_map_from_parent = keep_shore.vertex_map;
  node.shore_child->parent_edge_ids = keep_shore.parent_edge_ids;
  node.co_shore_child = std::make_unique<DecompositionNode>();
  node.co_shore_child->graph = keep_co.graph;
  node.co_shore_child->vertex_map_from_parent = keep_co.vertex_map;
  node.co_shore_child->parent_edge_ids = keep_co.parent_edge_ids;
  decompose_rec(*node.shore_child, choose, state);
  decompose_rec(*node.co_shore_child, choose, state);
}

int count_bricks(const DecompositionNode& node) {
  if (node.leaf) return *node.leaf == LeafKind::Brick ? 1 : 0;
  return count_bricks(*node.shore_child) + count_bricks(*node.co_shore_child);
}

void collect_leaves(const DecompositionNode& node,
                    std::vector<const DecompositionNode*>& out) {
  if (node.leaf) {
    out.push_back(&node);
    return;
  }
  collect_leaves(*node.shore_child, out);
  collect_leaves(*node.co_shore_child, out);
}

}  // namespace

bool is_tight_cut(const MultiGraph& g, const Cut& c) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "tight cuts are defined on matching covered graphs");
  return tight_against(g, matching_edge_masks(g), c.shore);
}

std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "tight cut search needs a matching covered graph");
  return first_tight_cut_impl(g, matching_edge_masks(g));
}

std::vector<Cut> all_nontrivial_tight_cuts(const MultiGraph& g) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "tight cut search needs a matching covered graph");
  std::vector<Bits> pm_masks = matching_edge_masks(g);
  std::vector<Cut> cuts;
  visit_candidate_shores(g.n(), [&](const std::vector<int>& shore) {
    if (tight_against(g, pm_masks, shore)) cuts.push_back(cut_of(g, shore));
    return true;
  });
  return cuts;
}

Cut widen_two_edge_tight_cut(const MultiGraph& g, const Cut& c) {
  require(is_matching_covered(g), ErrorCode::PreconditionViolated,
          "host must be matching covered");
  for (int v = 0; v < g.n(); ++v)
    require(g.degree(v) >= 3, ErrorCode::PreconditionViolated,
            "minimum degree must be at least three");
  Cut cut = cut_of(g, c.shore);  // recompute boundary from the shore
  require(!cut.trivial, ErrorCode::PreconditionViolated, "cut must be nontrivial");
  require(cut.boundary.size() == 2, ErrorCode::PreconditionViolated,
          "cut must have exactly two edges, got " +
              std::to_string(cut.boundary.size()));
  require(is_tight_cut(g, cut), ErrorCode::PreconditionViolated,
          "cut must be tight");
  std::vector<char> in(g.n(), 0);
  for (int v : cut.shore) in[v] = 1;
  const Edge& e1 = g.edge(cut.boundary[0]);
  const Edge& e2 = g.edge(cut.boundary[1]);
  int u = in[e1.u] ? e1.u : e1.v;                  // shore end of the first edge
  int v_far = in[e2.u] ? e2.v : e2.u;              // far end of the second edge
  require(u != (in[e2.u] ? e2.u : e2.v), ErrorCode::PreconditionViolated,
          "tight 2-edge cut cannot have both edges at one shore vertex");
  std::vector<int> shore;
  for (int w : cut.shore)
    if (w != u) shore.push_back(w);
  shore.push_back(v_far);
  std::sort(shore.begin(), shore.end());
  return cut_of(g, shore);
}

Contraction contract_to_shore(const MultiGraph& g, const std::vector<int>& keep) {
  std::vector<char> in(g.n(), 0);
  for (int v : keep) {
    require(v >= 0 && v < g.n(), ErrorCode::VertexOutOfRange,
            "shore vertex " + std::to_string(v));
    in[v] = 1;
  }
  Contraction out;
  out.vertex_map.assign(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (in[v]) out.vertex_map[v] = next++;
  out.contraction_vertex = next;  // largest fresh index
  for (int v = 0; v < g.n(); ++v)
    if (!in[v]) out.vertex_map[v] = out.contraction_vertex;
  std::vector<Edge> edges;
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    if (!in[e.u] && !in[e.v]) continue;  // inside the contracted side
    edges.push_back({out.vertex_map[e.u], out.vertex_map[e.v]});
    out.parent_edge_ids.push_back(id);
  }
  out.graph = MultiGraph(next + 1, std::move(edges));
  return out;
}

std::pair<MultiGraph, MultiGraph> c_contractions(const MultiGraph& g, const Cut& c) {
  Cut cut = cut_of(g, c.shore);
  require(!cut.trivial, ErrorCode::TrivialCut,
          "C-contractions are defined for nontrivial cuts");
  return {contract_to_shore(g, cut.shore).graph,
          contract_to_shore(g, cut.co_shore).graph};
}

std::pair<DecompositionTree, BInvariant> tight_cut_decomposition(const MultiGraph& g) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "decomposition needs a matching covered graph");
  DecompositionTree tree;
  tree.root = std::make_unique<DecompositionNode>();
  tree.root->graph = g;
  CutChooser deterministic = [](const MultiGraph& h, const std::vector<Bits>& pm,
                                void*) { return first_tight_cut_impl(h, pm); };
  decompose_rec(*tree.root, deterministic, nullptr);
  BInvariant b{count_bricks(*tree.root)};
  return {std::move(tree), b};
}

std::pair<DecompositionTree, BInvariant> tight_cut_decomposition_random(
    const MultiGraph& g, std::uint64_t seed) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "decomposition needs a matching covered graph");
  DecompositionTree tree;
  tree.root = std::make_unique<DecompositionNode>();
  tree.root->graph = g;
  std::mt19937_64 rng(seed);
  CutChooser random_choice = [](const MultiGraph& h, const std::vector<Bits>& pm,
                                void* state) -> std::optional<Cut> {
    auto& rng = *static_cast<std::mt19937_64*>(state);
    std::vector<Cut> cuts;
    visit_candidate_shores(h.n(), [&](const std::vector<int>& shore) {
      if (tight_against(h, pm, shore)) cuts.push_back(cut_of(h, shore));
      return true;
    });
    if (cuts.empty()) return std::nullopt;
    return cuts[rng() % cuts.size()];
  };
  decompose_rec(*tree.root, random_choice, &rng);
  BInvariant b{count_bricks(*tree.root)};
  return {std::move(tree), b};
}

std::vector<const DecompositionNode*> decomposition_leaves(
    const DecompositionTree& tree) {
  std::vector<const DecompositionNode*> out;
  collect_leaves(*tree.root, out);
  return out;
}

bool is_brick(const MultiGraph& g) {
  require(g.n() >= 4, ErrorCode::TooSmall, "bricks have at least four vertices");
  if (g.n() % 2 != 0) return false;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      std::vector<char> keep(g.n(), 1);
      keep[u] = keep[v] = 0;
      MultiGraph h = induced_subgraph(g, keep);
      if (!h.is_connected() || !is_matchable(h)) return false;
    }
  }
  return true;
}

bool is_brace(const MultiGraph& g) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "braces are matching covered by definition");
  if (!g.is_bipartite()) return false;
  return !find_nontrivial_tight_cut(g).has_value();
}

bool is_near_brick(const MultiGraph& g) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "near-bricks are matching covered by definition");
  return tight_cut_decomposition(g).second.value == 1;
}

}  // namespace matchkit
