#include "matchkit/corpus.hpp"

#include <algorithm>
#include <unordered_map>

namespace matchkit {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::uint64_t invariant_fingerprint(const MultiGraph& g) {
  int n = g.n();
  std::vector<std::uint64_t> colour(n);
  for (int v = 0; v < n; ++v)
    colour[v] = mix(0x10001, static_cast<std::uint64_t>(g.degree(v)));
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> neigh;
      for (auto [to, id] : g.incident(v)) neigh.push_back(colour[to]);
      std::sort(neigh.begin(), neigh.end());
      std::uint64_t h = mix(colour[v], 0xabcd);
      for (auto c : neigh) h = mix(h, c);
      next[v] = h;
    }
    colour = next;
  }
  std::sort(colour.begin(), colour.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(g.m()));
  for (auto c : colour) h = mix(h, c);
  return h;
}

std::vector<MultiGraph> all_connected_graphs(int n) {
  require(n >= 1, ErrorCode::BadParams, "order must be >= 1");
  std::vector<MultiGraph> current;
  current.push_back(build_graph(1, {}));
  for (int order = 2; order <= n; ++order) {
    std::vector<MultiGraph> next;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (const MultiGraph& base : current) {
      int prev = base.n();
      // Attach a fresh vertex to every nonempty neighbourhood. Every
      // connected graph arises this way from deleting a non-cut vertex.
      for (unsigned mask = 1; mask < (1u << prev); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (int v = 0; v < prev; ++v)
          if (mask & (1u << v)) edges.push_back({v, prev});
        MultiGraph cand(order, std::move(edges));
        std::uint64_t key = invariant_fingerprint(cand);
        auto& bucket = buckets[key];
        bool fresh = true;
        for (std::size_t idx : bucket) {
          if (are_isomorphic(cand, next[idx])) {
            fresh = false;
            break;
          }
        }
        if (fresh) {
          bucket.push_back(next.size());
          next.push_back(std::move(cand));
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace matchkit
