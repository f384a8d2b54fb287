#include "matchkit/families.hpp"

#include <algorithm>

#include "matchkit/corpus.hpp"
#include "matchkit/tight_cut.hpp"

namespace matchkit {

MultiGraph odd_wheel(int k, const std::vector<int>& spoke_mults) {
  require(k >= 1, ErrorCode::BadParams, "odd wheel needs k >= 1");
  int rim = 2 * k + 1;
  std::vector<int> mults = spoke_mults.empty() ? std::vector<int>(rim, 1) : spoke_mults;
  require(static_cast<int>(mults.size()) == rim, ErrorCode::BadParams,
          "expected " + std::to_string(rim) + " spoke multiplicities");
  for (int m : mults)
    require(m >= 1, ErrorCode::BadParams, "spoke multiplicities must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < rim; ++i) edges.push_back({i, (i + 1) % rim});
  for (int i = 0; i < rim; ++i)
    for (int c = 0; c < mults[i]; ++c) edges.push_back({rim, i});
  return MultiGraph(rim + 1, std::move(edges));
}

MultiGraph k4_splice_k33() {
  // a1=0 a2=1 b1=2 b2=3 b3=4 t1=5 t2=6 t3=7
  return build_graph(8, {{0, 2}, {0, 3}, {0, 4},
                         {1, 2}, {1, 3}, {1, 4},
                         {5, 2}, {6, 3}, {7, 4},
                         {5, 6}, {6, 7}, {5, 7}});
}

MultiGraph murty_graph(int extra_a1a2_mult) {
  require(extra_a1a2_mult >= 0, ErrorCode::BadParams,
          "extra multiplicity must be >= 0");
  MultiGraph base = k4_splice_k33();
  std::vector<Edge> edges = base.edges();
  for (int c = 0; c <= extra_a1a2_mult; ++c) edges.push_back({0, 1});
  return MultiGraph(8, std::move(edges));
}

MultiGraph p_brick(int k) {
  require(k >= 2, ErrorCode::BadParams, "p_brick needs k >= 2");
  int rim = 2 * k + 1;
  int u1 = rim, u2 = rim + 1, v2 = rim + 2, u0 = rim + 3, v0 = rim + 4;
  std::vector<Edge> edges;
  for (int i = 0; i < rim; ++i) edges.push_back({i, (i + 1) % rim});
  edges.push_back({v2, 0});
  edges.push_back({v2, 4});
  edges.push_back({u1, 2});
  edges.push_back({u2, 1});
  edges.push_back({u2, 3});
  for (int i = 5; i < rim; ++i) edges.push_back({u2, i});
  edges.push_back({u0, u2});
  edges.push_back({u0, u1});
  edges.push_back({u0, v0});
  edges.push_back({v0, u1});
  edges.push_back({v0, v2});
  return MultiGraph(rim + 5, std::move(edges));
}

MultiGraph norine_thomas(NorineThomasTag tag, int order) {
  switch (tag) {
    case NorineThomasTag::OddWheel: {
      require(order >= 4 && order % 2 == 0, ErrorCode::BadParams,
              "odd wheel order must be even and >= 4");
      return odd_wheel((order - 2) / 2);
    }
    case NorineThomasTag::Prism: {
      require(order >= 6 && order % 2 == 0 && (order / 2) % 2 == 1,
              ErrorCode::BadParams,
              "prism bricks have order 2t with t odd >= 3");
      int t = order / 2;
      std::vector<Edge> edges;
      for (int i = 0; i < t; ++i) edges.push_back({i, (i + 1) % t});
      for (int i = 0; i < t; ++i) edges.push_back({t + i, t + (i + 1) % t});
      for (int i = 0; i < t; ++i) edges.push_back({i, t + i});
      return MultiGraph(order, std::move(edges));
    }
    case NorineThomasTag::MoebiusLadder: {
      require(order >= 4 && order % 4 == 0, ErrorCode::BadParams,
              "Moebius ladder bricks have order divisible by four");
      int t = order / 2;
      std::vector<Edge> edges;
      for (int i = 0; i < order; ++i) edges.push_back({i, (i + 1) % order});
      for (int i = 0; i < t; ++i) edges.push_back({i, i + t});
      return MultiGraph(order, std::move(edges));
    }
    case NorineThomasTag::TruncatedBiwheel: {
      require(order >= 8 && order % 2 == 0, ErrorCode::BadParams,
              "truncated biwheel order must be even and >= 8");
      int t = order / 2;
      int path_last = 2 * t - 3;  // path vertices 0..2t-3, hubs 2t-2, 2t-1
      int h1 = 2 * t - 2, h2 = 2 * t - 1;
      std::vector<Edge> edges;
      for (int i = 0; i < path_last; ++i) edges.push_back({i, i + 1});
      edges.push_back({h1, 0});
      edges.push_back({h1, path_last});
      edges.push_back({h2, 0});
      edges.push_back({h2, path_last});
      for (int i = 1; i < path_last; ++i)
        edges.push_back({i % 2 == 1 ? h1 : h2, i});
      return MultiGraph(order, std::move(edges));
    }
    case NorineThomasTag::Staircase: {
      require(order >= 8 && order % 2 == 0, ErrorCode::BadParams,
              "staircase order must be even and >= 8");
      int t = order / 2;
      // Rails a_i = 0..t-2 and b_i = t-1..2t-3; x and y close the ends
      // into triangles and are joined to each other.
      int a0 = 0, b0 = t - 1, x = 2 * t - 2, y = 2 * t - 1;
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < t - 1; ++i) {
        edges.push_back({a0 + i, a0 + i + 1});
        edges.push_back({b0 + i, b0 + i + 1});
      }
      for (int i = 0; i < t - 1; ++i) edges.push_back({a0 + i, b0 + i});
      edges.push_back({x, a0});
      edges.push_back({x, b0});
      edges.push_back({x, y});
      edges.push_back({y, a0 + t - 2});
      edges.push_back({y, b0 + t - 2});
      return MultiGraph(order, std::move(edges));
    }
    case NorineThomasTag::Petersen: {
      require(order == 10, ErrorCode::BadParams, "the Petersen graph has order 10");
      return petersen_graph();
    }
  }
  fail(ErrorCode::BadParams, "unknown family tag");
}

MultiGraph splice(const MultiGraph& g1, int u, const MultiGraph& g2, int v,
                  const std::vector<std::pair<int, int>>& pairing) {
  require(u >= 0 && u < g1.n() && v >= 0 && v < g2.n(),
          ErrorCode::VertexOutOfRange, "splice vertices");
  require(g1.degree(u) == g2.degree(v), ErrorCode::DegreeMismatch,
          "splice needs equal degrees, got " + std::to_string(g1.degree(u)) +
              " and " + std::to_string(g2.degree(v)));
  std::vector<int> at_u, at_v;
  for (auto [to, id] : g1.incident(u)) at_u.push_back(id);
  for (auto [to, id] : g2.incident(v)) at_v.push_back(id);
  std::sort(at_u.begin(), at_u.end());
  std::sort(at_v.begin(), at_v.end());
  require(pairing.size() == at_u.size(), ErrorCode::BadParams,
          "pairing must cover every boundary edge");
  std::vector<int> pair_of(g1.m(), -1);
  std::vector<char> used_v(g2.m(), 0);
  for (auto [e1, e2] : pairing) {
    require(std::binary_search(at_u.begin(), at_u.end(), e1) &&
                std::binary_search(at_v.begin(), at_v.end(), e2),
            ErrorCode::BadParams, "pairing edge not incident to the seam");
    require(pair_of[e1] == -1 && !used_v[e2], ErrorCode::BadParams,
            "pairing is not a bijection");
    pair_of[e1] = e2;
    used_v[e2] = 1;
  }

  std::vector<int> map1(g1.n()), map2(g2.n());
  int next = 0;
  for (int w = 0; w < g1.n(); ++w) map1[w] = (w == u) ? -1 : next++;
  for (int w = 0; w < g2.n(); ++w) map2[w] = (w == v) ? -1 : next++;

  std::vector<Edge> edges;
  for (int id = 0; id < g1.m(); ++id) {
    const Edge& e = g1.edge(id);
    if (e.u == u || e.v == u) continue;
    edges.push_back({map1[e.u], map1[e.v]});
  }
  for (int id = 0; id < g2.m(); ++id) {
    const Edge& e = g2.edge(id);
    if (e.u == v || e.v == v) continue;
    edges.push_back({map2[e.u], map2[e.v]});
  }
  for (int e1 : at_u) {
    int e2 = pair_of[e1];
    edges.push_back({map1[g1.other_end(e1, u)], map2[g2.other_end(e2, v)]});
  }
  return MultiGraph(g1.n() + g2.n() - 2, std::move(edges));
}

std::vector<MultiGraph> splice_all(const MultiGraph& g1, int u,
                                   const MultiGraph& g2, int v) {
  std::vector<int> at_u, at_v;
  for (auto [to, id] : g1.incident(u)) at_u.push_back(id);
  for (auto [to, id] : g2.incident(v)) at_v.push_back(id);
  std::sort(at_u.begin(), at_u.end());
  std::sort(at_v.begin(), at_v.end());
  require(at_u.size() == at_v.size(), ErrorCode::DegreeMismatch, "splice_all");
  std::vector<MultiGraph> out;
  std::vector<int> perm = at_v;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::pair<int, int>> pairing;
    for (std::size_t i = 0; i < at_u.size(); ++i)
      pairing.emplace_back(at_u[i], perm[i]);
    MultiGraph s = splice(g1, u, g2, v, pairing);
    bool fresh = true;
    for (const MultiGraph& seen : out) {
      if (invariant_fingerprint(seen) == invariant_fingerprint(s) &&
          are_isomorphic(seen, s)) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.push_back(std::move(s));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MultiGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return MultiGraph(n, std::move(edges));
}

MultiGraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return MultiGraph(a + b, std::move(edges));
}

MultiGraph cycle_graph(int n) {
  require(n >= 2, ErrorCode::BadParams, "cycle needs >= 2 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return MultiGraph(n, std::move(edges));
}

MultiGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return MultiGraph(n, std::move(edges));
}

MultiGraph cube_graph() {
  // Bottom face 0..3, top face 4..7, vertical edges i - (i+4).
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) edges.push_back({i, (i + 1) % 4});
  for (int i = 0; i < 4; ++i) edges.push_back({4 + i, 4 + (i + 1) % 4});
  for (int i = 0; i < 4; ++i) edges.push_back({i, i + 4});
  return MultiGraph(8, std::move(edges));
}

MultiGraph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - (i+5).
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  return MultiGraph(10, std::move(edges));
}

}  // namespace matchkit
