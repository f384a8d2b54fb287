// Test-only brute-force oracles. These deliberately avoid the library's
// search strategies: subsets and permutations only, so they can vouch
// for the clever paths independently.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "matchkit/graph.hpp"

namespace testing_oracles {

using matchkit::MultiGraph;

// Number of perfect matchings by checking every edge subset of size
// n/2. Only for small m.
inline long brute_pm_count(const MultiGraph& g) {
  int n = g.n(), m = g.m();
  if (n % 2 != 0) return 0;
  int k = n / 2;
  if (k == 0) return 1;
  if (m < k) return 0;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  long count = 0;
  while (true) {
    std::vector<int> cover(n, 0);
    for (int i : idx) {
      ++cover[g.edge(i).u];
      ++cover[g.edge(i).v];
    }
    if (std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }))
      ++count;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

// Cycle count as edge subsets inducing a connected 2-regular subgraph.
// On simple graphs this coincides with vertex-sequence cycles.
inline long brute_cycle_count(const MultiGraph& g, int parity /*0 even, 1 odd, -1 any*/) {
  int m = g.m();
  long count = 0;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<int> deg(g.n(), 0);
    int edges = 0;
    for (int id = 0; id < m; ++id) {
      if (mask & (1ul << id)) {
        ++edges;
        ++deg[g.edge(id).u];
        ++deg[g.edge(id).v];
      }
    }
    bool two_regular = true;
    int touched = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (deg[v] == 2)
        ++touched;
      else if (deg[v] != 0)
        two_regular = false;
    }
    if (!two_regular || touched != edges) continue;
    // Connectivity of the chosen edges.
    int start = -1;
    for (int v = 0; v < g.n(); ++v)
      if (deg[v] == 2) start = v;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reach = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [to, id] : g.incident(v)) {
        if ((mask & (1ul << id)) && !seen[to]) {
          seen[to] = 1;
          ++reach;
          stack.push_back(to);
        }
      }
    }
    if (reach != touched) continue;
    if (parity == -1 || edges % 2 == parity) ++count;
  }
  return count;
}

// Isomorphism by trying all vertex permutations; n <= 8 or so.
inline bool brute_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return false;
  int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.multiplicity(u, v) != h.multiplicity(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Orbit partition of the automorphism group, by brute permutations.
inline std::vector<std::vector<int>> brute_orbits(const MultiGraph& g) {
  int n = g.n();
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  auto root = [&](int v) {
    while (cls[v] != v) v = cls[v];
    return v;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.multiplicity(u, v) != g.multiplicity(perm[u], perm[v])) ok = false;
    if (ok) {
      for (int v = 0; v < n; ++v) {
        int a = root(v), b = root(perm[v]);
        if (a != b) cls[std::max(a, b)] = std::min(a, b);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int>> orbits(n);
  for (int v = 0; v < n; ++v) orbits[root(v)].push_back(v);
  orbits.erase(std::remove_if(orbits.begin(), orbits.end(),
                              [](auto& o) { return o.empty(); }),
               orbits.end());
  return orbits;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace testing_oracles
