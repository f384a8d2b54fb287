#include <algorithm>
#include <map>

#include "matchkit/graph.hpp"

namespace matchkit {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const MultiGraph& g) {
  Matrix mat(g.n(), std::vector<int>(g.n(), 0));
  for (const Edge& e : g.edges()) {
    ++mat[e.u][e.v];
    ++mat[e.v][e.u];
  }
  return mat;
}

// Per-vertex invariant: degree, sorted incident multiplicities, sorted
// multiset of neighbour degrees. Cheap and strong enough at this scale.
std::vector<int> vertex_invariant(const MultiGraph& g, const Matrix& mat, int v) {
  std::vector<int> inv;
  inv.push_back(g.degree(v));
  std::vector<int> mults, ndegs;
  for (int u = 0; u < g.n(); ++u) {
    if (mat[v][u] > 0) {
      mults.push_back(mat[v][u]);
      ndegs.push_back(g.degree(u));
    }
  }
  std::sort(mults.begin(), mults.end());
  std::sort(ndegs.begin(), ndegs.end());
  inv.push_back(-1);
  inv.insert(inv.end(), mults.begin(), mults.end());
  inv.push_back(-1);
  inv.insert(inv.end(), ndegs.begin(), ndegs.end());
  return inv;
}

struct IsoSearch {
  const Matrix& gm;
  const Matrix& hm;
  const std::vector<int>& order;            // g vertices, assignment order
  const std::vector<std::vector<char>>& compatible;  // [gv][hv]
  std::vector<int> map_gh;
  std::vector<char> used_h;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    int n = static_cast<int>(used_h.size());
    for (int w = 0; w < n; ++w) {
      if (used_h[w] || !compatible[v][w]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth; ++i) {
        int p = order[i];
        if (gm[v][p] != hm[w][map_gh[p]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_gh[v] = w;
      used_h[w] = 1;
      if (extend(depth + 1)) return true;
      used_h[w] = 0;
      map_gh[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool verify_iso_witness(const MultiGraph& g, const MultiGraph& h, const IsoWitness& w) {
  if (g.n() != h.n() || g.m() != h.m()) return false;
  if (static_cast<int>(w.mapping.size()) != g.n()) return false;
  std::vector<char> hit(h.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    int t = w.mapping[v];
    if (t < 0 || t >= h.n() || hit[t]) return false;
    hit[t] = 1;
  }
  Matrix gm = multiplicity_matrix(g), hm = multiplicity_matrix(h);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (gm[u][v] != hm[w.mapping[u]][w.mapping[v]]) return false;
  return true;
}

std::optional<IsoWitness> are_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  int n = g.n();
  if (n == 0) return IsoWitness{{}};

  Matrix gm = multiplicity_matrix(g), hm = multiplicity_matrix(h);

  std::vector<std::vector<int>> ginv(n), hinv(n);
  std::map<std::vector<int>, int> freq;
  for (int v = 0; v < n; ++v) {
    ginv[v] = vertex_invariant(g, gm, v);
    hinv[v] = vertex_invariant(h, hm, v);
    ++freq[ginv[v]];
    --freq[hinv[v]];
  }
  for (auto& [key, count] : freq)
    if (count != 0) return std::nullopt;

  std::vector<std::vector<char>> compatible(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (ginv[v] == hinv[w]) compatible[v][w] = 1;

  // Assignment order: rarest invariant first, then prefer vertices
  // adjacent to already-ordered ones so the multiplicity checks bite
  // early.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::map<std::vector<int>, int> gcount;
  for (int v = 0; v < n; ++v) ++gcount[ginv[v]];
  for (int step = 0; step < n; ++step) {
    int best = -1;
    bool best_adj = false;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool adj = false;
      for (int u : order)
        if (gm[v][u] > 0) adj = true;
      if (best == -1 || (adj && !best_adj) ||
          (adj == best_adj && gcount[ginv[v]] < gcount[ginv[best]])) {
        best = v;
        best_adj = adj;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  IsoSearch search{gm, hm, order, compatible,
                   std::vector<int>(n, -1), std::vector<char>(n, 0)};
  if (!search.extend(0)) return std::nullopt;
  return IsoWitness{search.map_gh};
}

}  // namespace matchkit
