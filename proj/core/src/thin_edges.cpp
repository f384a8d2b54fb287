#include "matchkit/thin_edges.hpp"

#include <algorithm>

#include "matchkit/families.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/tight_cut.hpp"

namespace matchkit {

namespace {

bool brick_or_false(const MultiGraph& g) {
  if (g.n() < 4) return false;
  return is_brick(g);
}

// Report for one edge; the caller has already vetted that g is a brick.
ThinEdgeReport report_unchecked(const MultiGraph& g, int edge_id) {
  ThinEdgeReport r;
  r.edge_id = edge_id;
  MultiGraph deleted = remove_edge(g, edge_id);
  if (!is_matching_covered(deleted)) return r;
  RetractResult retracted = retract_of(deleted);
  r.retract_after_deletion = retracted.graph;
  r.thin = brick_or_false(retracted.graph);
  if (!r.thin) return r;
  r.strictly_thin = g.is_simple() && retracted.graph.is_simple();
  if (!r.strictly_thin) return r;
  const Edge& e = g.edge(edge_id);
  bool u_cubic = g.degree(e.u) == 3;
  bool v_cubic = g.degree(e.v) == 3;
  if (!u_cubic && !v_cubic) {
    r.index = 0;
  } else if (u_cubic != v_cubic) {
    r.index = 1;
  } else {
    bool in_triangle = false;
    for (int w : g.distinct_neighbours(e.u))
      if (w != e.v && g.multiplicity(w, e.v) > 0) in_triangle = true;
    r.index = in_triangle ? 3 : 2;
  }
  return r;
}

}  // namespace

ThinEdgeReport is_thin_edge(const MultiGraph& g, int edge_id) {
  require(edge_id >= 0 && edge_id < g.m(), ErrorCode::UnknownEdge,
          "edge id " + std::to_string(edge_id));
  require(g.n() >= 4 && is_brick(g), ErrorCode::NotABrick,
          "thin edges are defined on bricks");
  return report_unchecked(g, edge_id);
}

std::optional<int> find_strictly_thin_edge(const MultiGraph& g) {
  require(g.is_simple() && g.n() >= 4 && is_brick(g),
          ErrorCode::NotASimpleBrick,
          "strictly thin edges are defined on simple bricks");
  for (int id = 0; id < g.m(); ++id) {
    if (report_unchecked(g, id).strictly_thin) return id;
  }
  return std::nullopt;
}

bool index_structure_check(const MultiGraph& g, int edge_id) {
  require(edge_id >= 0 && edge_id < g.m(), ErrorCode::UnknownEdge,
          "edge id " + std::to_string(edge_id));
  require(g.is_simple() && g.n() >= 4 && is_brick(g),
          ErrorCode::PreconditionViolated, "host must be a simple brick");
  ThinEdgeReport r = report_unchecked(g, edge_id);
  require(r.strictly_thin, ErrorCode::PreconditionViolated,
          "edge " + std::to_string(edge_id) + " is not strictly thin");

  MultiGraph deleted = remove_edge(g, edge_id);
  std::vector<int> deg2;
  for (int v = 0; v < deleted.n(); ++v)
    if (deleted.degree(v) == 2) deg2.push_back(v);

  RetractResult retracted = retract_of(deleted);
  std::vector<int> class_size(retracted.graph.n(), 0);
  for (int v = 0; v < deleted.n(); ++v) ++class_size[retracted.vertex_trace[v]];
  std::vector<int> contraction_vertices;
  for (int v = 0; v < retracted.graph.n(); ++v)
    if (class_size[v] > 1) contraction_vertices.push_back(v);

  switch (*r.index) {
    case 0:
      return deg2.empty() && contraction_vertices.empty() &&
             retracted.graph.n() == deleted.n() &&
             retracted.graph.m() == deleted.m();
    case 1:
      return deg2.size() == 1 && contraction_vertices.size() == 1 &&
             retracted.graph.degree(contraction_vertices[0]) >= 4;
    case 2: {
      if (deg2.size() != 2 || contraction_vertices.size() != 2) return false;
      // The two degree-two vertices must have no common neighbour.
      for (int w : deleted.distinct_neighbours(deg2[0]))
        if (w != deg2[1] && deleted.multiplicity(w, deg2[1]) > 0) return false;
      return retracted.graph.degree(contraction_vertices[0]) >= 4 &&
             retracted.graph.degree(contraction_vertices[1]) >= 4;
    }
    case 3: {
      if (deg2.size() != 2 || contraction_vertices.size() != 1) return false;
      bool common = false;
      for (int w : deleted.distinct_neighbours(deg2[0]))
        if (w != deg2[1] && deleted.multiplicity(w, deg2[1]) > 0) common = true;
      return common && retracted.graph.degree(contraction_vertices[0]) >= 5;
    }
  }
  return false;
}

std::optional<std::string> norine_thomas_label(const MultiGraph& g) {
  int n = g.n();
  auto matches = [&](NorineThomasTag tag) {
    try {
      return are_isomorphic(g, norine_thomas(tag, n)).has_value();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BadParams) return false;
      throw;
    }
  };
  if (matches(NorineThomasTag::OddWheel)) return "odd_wheel";
  if (matches(NorineThomasTag::Prism)) return "prism";
  if (matches(NorineThomasTag::MoebiusLadder)) return "moebius_ladder";
  if (matches(NorineThomasTag::TruncatedBiwheel)) return "truncated_biwheel";
  if (matches(NorineThomasTag::Staircase)) return "staircase";
  if (matches(NorineThomasTag::Petersen)) return "petersen";
  return std::nullopt;
}

ReductionTrace reduce_to_norine_thomas(const MultiGraph& g) {
  require(g.is_simple() && g.n() >= 4 && is_brick(g),
          ErrorCode::NotASimpleBrick,
          "reduction is defined on simple bricks");
  ReductionTrace trace;
  MultiGraph current = g;
  while (true) {
    std::optional<int> edge;
    ThinEdgeReport chosen;
    for (int id = 0; id < current.m(); ++id) {
      ThinEdgeReport r = report_unchecked(current, id);
      if (r.strictly_thin) {
        edge = id;
        chosen = std::move(r);
        break;
      }
    }
    if (!edge) break;
    trace.steps.push_back({current, *edge, *chosen.index});
    current = *chosen.retract_after_deletion;
  }
  trace.terminal = current;
  std::optional<std::string> label = norine_thomas_label(current);
  require(label.has_value(), ErrorCode::ReductionStuck,
          "terminal brick matches no Norine-Thomas family");
  trace.family_label = *label;
  return trace;
}

}  // namespace matchkit
