#include "matchkit/matching.hpp"

#include <algorithm>

namespace matchkit {

namespace {

// Backtracking matcher over an alive-vertex mask. Graphs here are desk
// scale, so plain exhaustive search with the uncovered-degree prune is
// the baseline; correctness over asymptotics.
bool matchable_rec(const MultiGraph& g, std::vector<char>& alive, int alive_count) {
  if (alive_count == 0) return true;
  int v = -1;
  for (int i = 0; i < g.n(); ++i) {
    if (alive[i]) {
      v = i;
      break;
    }
  }
  for (int u : g.distinct_neighbours(v)) {
    if (!alive[u]) continue;
    alive[v] = alive[u] = 0;
    bool ok = matchable_rec(g, alive, alive_count - 2);
    alive[v] = alive[u] = 1;
    if (ok) return true;
  }
  return false;
}

void enumerate_rec(const MultiGraph& g, std::vector<char>& covered, int uncovered,
                   std::vector<int>& chosen, std::vector<PerfectMatching>& out,
                   std::size_t budget) {
  if (uncovered == 0) {
    if (out.size() == budget)
      fail(ErrorCode::BudgetExhausted,
           "perfect matching enumeration truncated at " + std::to_string(budget));
    PerfectMatching m;
    m.edge_ids = chosen;
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    out.push_back(std::move(m));
    return;
  }
  int v = -1;
  for (int i = 0; i < g.n(); ++i) {
    if (!covered[i]) {
      v = i;
      break;
    }
  }
  for (auto [to, id] : g.incident(v)) {
    if (covered[to]) continue;
    covered[v] = covered[to] = 1;
    chosen.push_back(id);
    enumerate_rec(g, covered, uncovered - 2, chosen, out, budget);
    chosen.pop_back();
    covered[v] = covered[to] = 0;
  }
}

}  // namespace

bool is_matchable(const MultiGraph& g) {
  if (g.n() % 2 != 0) return false;
  std::vector<char> alive(g.n(), 1);
  return matchable_rec(g, alive, g.n());
}

bool is_matchable_without(const MultiGraph& g, int a, int b) {
  if (g.n() % 2 != 0) return false;
  std::vector<char> alive(g.n(), 1);
  alive[a] = alive[b] = 0;
  return matchable_rec(g, alive, g.n() - 2);
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g,
                                                         std::size_t budget) {
  require(budget >= 1, ErrorCode::BadParams, "budget must be >= 1");
  std::vector<PerfectMatching> out;
  if (g.n() % 2 != 0) return out;
  std::vector<char> covered(g.n(), 0);
  std::vector<int> chosen;
  enumerate_rec(g, covered, g.n(), chosen, out, budget);
  return out;
}

bool is_matching_covered(const MultiGraph& g) {
  if (g.n() < 2 || g.n() % 2 != 0) return false;
  if (!g.is_connected()) return false;
  // An edge uv lies in some perfect matching iff g - u - v is matchable;
  // one check per adjacent vertex pair covers all parallel copies.
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [a, b] : pairs) {
    if (!is_matchable_without(g, a, b)) return false;
  }
  return true;
}

bool is_conformal(const MultiGraph& g, const std::vector<int>& vertex_set) {
  std::vector<char> alive(g.n(), 1);
  int removed = 0;
  for (int v : vertex_set) {
    require(v >= 0 && v < g.n(), ErrorCode::VertexOutOfRange,
            "vertex " + std::to_string(v));
    if (alive[v]) {
      alive[v] = 0;
      ++removed;
    }
  }
  int remaining = g.n() - removed;
  if (remaining % 2 != 0) return false;
  return matchable_rec(g, alive, remaining);
}

bool is_perfect_matching(const MultiGraph& g, const PerfectMatching& m) {
  if (g.n() % 2 != 0) return false;
  std::vector<char> covered(g.n(), 0);
  std::vector<char> used(g.m(), 0);
  for (int id : m.edge_ids) {
    if (id < 0 || id >= g.m() || used[id]) return false;
    used[id] = 1;
    const Edge& e = g.edge(id);
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v]) return false;
  return true;
}

std::vector<CycleSeq> symmetric_difference_cycles(const MultiGraph& g,
                                                  const PerfectMatching& m1,
                                                  const PerfectMatching& m2) {
  std::vector<char> in1(g.m(), 0), in2(g.m(), 0);
  for (int id : m1.edge_ids) in1[id] = 1;
  for (int id : m2.edge_ids) in2[id] = 1;
  // Incident symmetric-difference edges per vertex; degree is 0 or 2.
  std::vector<std::vector<int>> inc(g.n());
  for (int id = 0; id < g.m(); ++id) {
    if (in1[id] != in2[id]) {
      inc[g.edge(id).u].push_back(id);
      inc[g.edge(id).v].push_back(id);
    }
  }
  std::vector<CycleSeq> cycles;
  std::vector<char> edge_done(g.m(), 0);
  for (int start = 0; start < g.n(); ++start) {
    if (inc[start].size() != 2) continue;
    bool fresh = !edge_done[inc[start][0]];
    if (!fresh) continue;
    // Orient toward the smaller neighbour for a canonical traversal.
    int e0 = inc[start][0], e1 = inc[start][1];
    if (g.other_end(e1, start) < g.other_end(e0, start) ||
        (g.other_end(e1, start) == g.other_end(e0, start) && e1 < e0))
      std::swap(e0, e1);
    CycleSeq c;
    int v = start;
    int e = e0;
    while (true) {
      c.vertices.push_back(v);
      c.edge_ids.push_back(e);
      edge_done[e] = 1;
      v = g.other_end(e, v);
      if (v == start) break;
      e = (inc[v][0] == e) ? inc[v][1] : inc[v][0];
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

bool SubsetMatcher::matchable(const Bits& alive) {
  std::size_t cnt = alive.count();
  if (cnt % 2 != 0) return false;
  if (cnt == 0) return true;
  auto it = memo_.find(alive);
  if (it != memo_.end()) return it->second;
  int v = -1;
  for (int i = 0; i < g_.n(); ++i) {
    if (alive.test(i)) {
      v = i;
      break;
    }
  }
  bool ok = false;
  for (int u : g_.distinct_neighbours(v)) {
    if (!alive.test(u)) continue;
    Bits next = alive;
    next.reset(v);
    next.reset(u);
    if (matchable(next)) {
      ok = true;
      break;
    }
  }
  memo_.emplace(alive, ok);
  return ok;
}

}  // namespace matchkit
