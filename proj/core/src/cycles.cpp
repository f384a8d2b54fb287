#include <algorithm>

#include "matchkit/graph.hpp"

namespace matchkit {

namespace {

struct CycleDfs {
  const MultiGraph& g;
  ParityWant parity;
  const std::function<bool(const CycleSeq&)>& visit;
  std::vector<int> path;
  std::vector<int> path_edges;
  std::vector<char> on_path;
  bool stopped = false;

  bool parity_ok(int length) const {
    switch (parity) {
      case ParityWant::Odd: return length % 2 == 1;
      case ParityWant::Even: return length % 2 == 0;
      case ParityWant::Any: return true;
    }
    return true;
  }

  bool emit(const CycleSeq& c) {
    if (!visit(c)) {
      stopped = true;
      return false;
    }
    return true;
  }

  // Distinct neighbours of v above the start vertex, each with its
  // minimal connecting edge id (the deterministic representative).
  std::vector<std::pair<int, int>> branches(int v, int start) const {
    std::vector<std::pair<int, int>> out;
    for (auto [to, id] : g.incident(v)) {
      if (to < start) continue;
      bool found = false;
      for (auto& [t2, i2] : out) {
        if (t2 == to) {
          i2 = std::min(i2, id);
          found = true;
          break;
        }
      }
      if (!found) out.emplace_back(to, id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void dfs(int v, int start) {
    if (stopped) return;
    for (auto [to, id] : branches(v, start)) {
      if (stopped) return;
      if (to == start) {
        // Close only when canonical: length >= 3 and orientation with
        // the smaller second vertex.
        if (path.size() >= 3 && path[1] < path.back() &&
            parity_ok(static_cast<int>(path.size()))) {
          CycleSeq c;
          c.vertices = path;
          c.edge_ids = path_edges;
          c.edge_ids.push_back(id);
          if (!emit(c)) return;
        }
        continue;
      }
      if (on_path[to]) continue;
      on_path[to] = 1;
      path.push_back(to);
      path_edges.push_back(id);
      dfs(to, start);
      path.pop_back();
      path_edges.pop_back();
      on_path[to] = 0;
    }
  }
};

}  // namespace

bool visit_cycles(const MultiGraph& g, ParityWant parity,
                  const std::function<bool(const CycleSeq&)>& visit) {
  CycleDfs dfs{g, parity, visit, {}, {}, std::vector<char>(g.n(), 0)};
  for (int s = 0; s < g.n() && !dfs.stopped; ++s) {
    if (parity != ParityWant::Odd) {
      // 2-cycles: one per unordered pair of distinct parallel edges.
      for (int v : g.distinct_neighbours(s)) {
        if (v < s) continue;
        std::vector<int> ids;
        for (auto [to, id] : g.incident(s))
          if (to == v) ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size() && !dfs.stopped; ++i) {
          for (std::size_t j = i + 1; j < ids.size() && !dfs.stopped; ++j) {
            CycleSeq c;
            c.vertices = {s, v};
            c.edge_ids = {ids[i], ids[j]};
            dfs.emit(c);
          }
        }
      }
      if (dfs.stopped) break;
    }
    dfs.on_path[s] = 1;
    dfs.path = {s};
    dfs.path_edges.clear();
    dfs.dfs(s, s);
    dfs.on_path[s] = 0;
  }
  return !dfs.stopped;
}

std::vector<CycleSeq> enumerate_cycles(const MultiGraph& g, ParityWant parity,
                                       std::size_t budget) {
  require(budget >= 1, ErrorCode::BadParams, "budget must be >= 1");
  std::vector<CycleSeq> out;
  bool complete = visit_cycles(g, parity, [&](const CycleSeq& c) {
    if (out.size() == budget) return false;
    out.push_back(c);
    return true;
  });
  if (!complete)
    fail(ErrorCode::BudgetExhausted,
         "cycle enumeration truncated at " + std::to_string(budget));
  return out;
}

}  // namespace matchkit
