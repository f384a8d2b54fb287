#include "matchkit/graph.hpp"

#include <algorithm>
#include <queue>

namespace matchkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyOrFullShore: return "EmptyOrFullShore";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotMatchable: return "NotMatchable";
    case ErrorCode::NotMatchingCovered: return "NotMatchingCovered";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::WrongParity: return "WrongParity";
    case ErrorCode::TrivialCut: return "TrivialCut";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotDegreeTwo: return "NotDegreeTwo";
    case ErrorCode::ParallelPairAtV: return "ParallelPairAtV";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotABrick: return "NotABrick";
    case ErrorCode::NotASimpleBrick: return "NotASimpleBrick";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::ReductionStuck: return "ReductionStuck";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
  }
  return "UnknownError";
}

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  require(n_ >= 0, ErrorCode::BadParams, "negative vertex count");
  adj_.resize(n_);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    require(e.u >= 0 && e.u < n_ && e.v >= 0 && e.v < n_,
            ErrorCode::VertexOutOfRange,
            "edge " + std::to_string(id) + " endpoint out of range");
    require(e.u != e.v, ErrorCode::LoopEdge,
            "edge " + std::to_string(id) + " is a loop at vertex " +
                std::to_string(e.u));
    adj_[e.u].emplace_back(e.v, id);
    adj_[e.v].emplace_back(e.u, id);
  }
}

std::vector<int> MultiGraph::distinct_neighbours(int v) const {
  std::vector<int> out;
  for (auto [to, id] : adj_[v]) out.push_back(to);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MultiGraph::distinct_neighbour_count(int v) const {
  return static_cast<int>(distinct_neighbours(v).size());
}

int MultiGraph::multiplicity(int u, int v) const {
  int c = 0;
  for (auto [to, id] : adj_[u])
    if (to == v) ++c;
  return c;
}

bool MultiGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [to, id] : adj_[v]) {
      if (!seen[to]) {
        seen[to] = 1;
        ++reached;
        q.push(to);
      }
    }
  }
  return reached == n_;
}

bool MultiGraph::is_bipartite() const {
  std::vector<int> colour(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [to, id] : adj_[v]) {
        if (colour[to] == -1) {
          colour[to] = colour[v] ^ 1;
          q.push(to);
        } else if (colour[to] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool MultiGraph::is_simple() const {
  for (int v = 0; v < n_; ++v) {
    if (distinct_neighbour_count(v) != degree(v)) return false;
  }
  return true;
}

MultiGraph build_graph(int n, const std::vector<std::pair<int, int>>& endpoint_pairs) {
  std::vector<Edge> edges;
  edges.reserve(endpoint_pairs.size());
  for (auto [u, v] : endpoint_pairs) edges.push_back({u, v});
  return MultiGraph(n, std::move(edges));
}

MultiGraph underlying_simple(const MultiGraph& g) {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen(g.n(), std::vector<char>(g.n(), 0));
  for (const Edge& e : g.edges()) {
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    if (!seen[a][b]) {
      seen[a][b] = 1;
      edges.push_back({a, b});
    }
  }
  return MultiGraph(g.n(), std::move(edges));
}

Cut cut_of(const MultiGraph& g, const std::vector<int>& shore) {
  std::vector<char> in(g.n(), 0);
  for (int v : shore) {
    require(v >= 0 && v < g.n(), ErrorCode::VertexOutOfRange,
            "shore vertex " + std::to_string(v));
    in[v] = 1;
  }
  Cut c;
  for (int v = 0; v < g.n(); ++v)
    (in[v] ? c.shore : c.co_shore).push_back(v);
  require(!c.shore.empty() && !c.co_shore.empty(), ErrorCode::EmptyOrFullShore,
          "shore must be nonempty and proper");
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    if (in[e.u] != in[e.v]) c.boundary.push_back(id);
  }
  c.trivial = c.shore.size() == 1 || c.co_shore.size() == 1;
  return c;
}

MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == g.n(), ErrorCode::BadParams,
          "permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return MultiGraph(g.n(), std::move(edges));
}

MultiGraph remove_edge(const MultiGraph& g, int edge_id, std::vector<int>* old_ids) {
  require(edge_id >= 0 && edge_id < g.m(), ErrorCode::UnknownEdge,
          "edge id " + std::to_string(edge_id));
  std::vector<Edge> edges;
  if (old_ids) old_ids->clear();
  for (int id = 0; id < g.m(); ++id) {
    if (id == edge_id) continue;
    edges.push_back(g.edge(id));
    if (old_ids) old_ids->push_back(id);
  }
  return MultiGraph(g.n(), std::move(edges));
}

MultiGraph add_edge(const MultiGraph& g, int u, int v) {
  std::vector<Edge> edges = g.edges();
  edges.push_back({u, v});
  return MultiGraph(g.n(), std::move(edges));
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<char>& keep,
                            std::vector<int>* vertex_map,
                            std::vector<int>* old_edge_ids) {
  std::vector<int> map(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (keep[v]) map[v] = next++;
  std::vector<Edge> edges;
  if (old_edge_ids) old_edge_ids->clear();
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    if (keep[e.u] && keep[e.v]) {
      edges.push_back({map[e.u], map[e.v]});
      if (old_edge_ids) old_edge_ids->push_back(id);
    }
  }
  if (vertex_map) *vertex_map = map;
  return MultiGraph(next, std::move(edges));
}

Bits vertex_mask(const MultiGraph& g, const std::vector<int>& vertices) {
  Bits b(g.n());
  for (int v : vertices) b.set(v);
  return b;
}

std::vector<int> canonical_cycle_key(const CycleSeq& c) {
  const std::vector<int>& vs = c.vertices;
  int L = static_cast<int>(vs.size());
  int pos = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
  std::vector<int> fwd(L), bwd(L);
  for (int i = 0; i < L; ++i) {
    fwd[i] = vs[(pos + i) % L];
    bwd[i] = vs[(pos - i + L) % L];
  }
  return std::min(fwd, bwd);
}

bool is_valid_cycle(const MultiGraph& g, const CycleSeq& c) {
  int L = c.length();
  if (L < 2 || static_cast<int>(c.edge_ids.size()) != L) return false;
  std::vector<char> seen_v(g.n(), 0);
  for (int v : c.vertices) {
    if (v < 0 || v >= g.n() || seen_v[v]) return false;
    seen_v[v] = 1;
  }
  std::vector<int> ids = c.edge_ids;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  for (int i = 0; i < L; ++i) {
    int id = c.edge_ids[i];
    if (id < 0 || id >= g.m()) return false;
    int a = c.vertices[i], b = c.vertices[(i + 1) % L];
    const Edge& e = g.edge(id);
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  return true;
}

}  // namespace matchkit
