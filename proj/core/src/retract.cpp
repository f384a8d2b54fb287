#include "matchkit/retract.hpp"

#include <algorithm>
#include <random>

#include "matchkit/matching.hpp"

namespace matchkit {

namespace {

struct BicontractStep {
  MultiGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
  std::size_t deleted_loops = 0;
};

BicontractStep bicontract_impl(const MultiGraph& g, int v) {
  require(v >= 0 && v < g.n(), ErrorCode::VertexOutOfRange,
          "vertex " + std::to_string(v));
  require(g.degree(v) == 2, ErrorCode::NotDegreeTwo,
          "vertex " + std::to_string(v) + " has degree " +
              std::to_string(g.degree(v)));
  int u = g.incident(v)[0].first;
  int w = g.incident(v)[1].first;
  require(u != w, ErrorCode::ParallelPairAtV,
          "both edges at vertex " + std::to_string(v) +
              " join the same neighbour");
  int e1 = g.incident(v)[0].second;
  int e2 = g.incident(v)[1].second;

  // The class {u, v, w} merges into one vertex at the smallest of the
  // three positions; indices are re-packed densely.
  int rep = std::min({u, v, w});
  BicontractStep out;
  out.vertex_map.assign(g.n(), -1);
  int next = 0;
  for (int i = 0; i < g.n(); ++i) {
    if ((i == u || i == v || i == w) && i != rep) continue;
    out.vertex_map[i] = next++;
  }
  int merged = out.vertex_map[rep];
  out.vertex_map[u] = out.vertex_map[v] = out.vertex_map[w] = merged;

  std::vector<Edge> edges;
  for (int id = 0; id < g.m(); ++id) {
    if (id == e1 || id == e2) continue;
    const Edge& e = g.edge(id);
    int a = out.vertex_map[e.u], b = out.vertex_map[e.v];
    if (a == b) {
      // An original u-w edge would become a loop; loops lie in no
      // matching, so dropping them preserves the matching structure.
      ++out.deleted_loops;
      continue;
    }
    edges.push_back({a, b});
  }
  out.graph = MultiGraph(g.n() - 2, std::move(edges));
  return out;
}

int lowest_eligible(const MultiGraph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 2 && g.incident(v)[0].first != g.incident(v)[1].first)
      return v;
  }
  return -1;
}

RetractResult retract_loop(const MultiGraph& g,
                           const std::function<int(const MultiGraph&)>& pick) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "the retract is defined for matching covered graphs");
  RetractResult r;
  r.graph = g;
  r.vertex_trace.resize(g.n());
  for (int v = 0; v < g.n(); ++v) r.vertex_trace[v] = v;
  while (r.graph.n() > 2) {
    int v = pick(r.graph);
    if (v < 0) break;
    BicontractStep step = bicontract_impl(r.graph, v);
    for (int& t : r.vertex_trace) t = step.vertex_map[t];
    r.deleted_loops += step.deleted_loops;
    r.graph = std::move(step.graph);
  }
  return r;
}

}  // namespace

MultiGraph bicontract(const MultiGraph& g, int v) {
  return bicontract_impl(g, v).graph;
}

RetractResult retract_of(const MultiGraph& g) {
  return retract_loop(g, lowest_eligible);
}

RetractResult retract_of_random(const MultiGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return retract_loop(g, [&rng](const MultiGraph& h) {
    std::vector<int> eligible;
    for (int v = 0; v < h.n(); ++v) {
      if (h.degree(v) == 2 && h.incident(v)[0].first != h.incident(v)[1].first)
        eligible.push_back(v);
    }
    if (eligible.empty()) return -1;
    return eligible[rng() % eligible.size()];
  });
}

}  // namespace matchkit
