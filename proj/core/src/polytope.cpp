#include "matchkit/polytope.hpp"

#include <queue>

namespace matchkit {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    require(den != 0, ErrorCode::ParseError, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

EdgeVector zero_vector(const MultiGraph& g) {
  return EdgeVector{std::vector<Rational>(g.m(), Rational(0))};
}

EdgeVector incidence_vector(const MultiGraph& g, const PerfectMatching& m) {
  require(is_perfect_matching(g, m), ErrorCode::InvalidMatching,
          "incidence vector needs a perfect matching of the host");
  EdgeVector x = zero_vector(g);
  for (int id : m.edge_ids) x.coords[id] = 1;
  return x;
}

bool is_one_regular(const MultiGraph& g, const EdgeVector& x) {
  for (int v = 0; v < g.n(); ++v) {
    Rational s = 0;
    for (auto [to, id] : g.incident(v)) s += x.coords[id];
    if (s != 1) return false;
  }
  return true;
}

bool skeleton_adjacent(const MultiGraph& g, const PerfectMatching& m1,
                       const PerfectMatching& m2) {
  require(is_perfect_matching(g, m1) && is_perfect_matching(g, m2),
          ErrorCode::InvalidMatching, "skeleton adjacency needs perfect matchings");
  return symmetric_difference_cycles(g, m1, m2).size() == 1;
}

SkeletonGraph build_skeleton(const MultiGraph& g, std::size_t budget) {
  require(is_matchable(g), ErrorCode::NotMatchable, "skeleton of an empty polytope");
  SkeletonGraph sk;
  sk.nodes = enumerate_perfect_matchings(g, budget);
  std::size_t n = sk.nodes.size();
  sk.adjacency.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adj = symmetric_difference_cycles(g, sk.nodes[i], sk.nodes[j]).size() == 1;
      sk.adjacency[i][j] = sk.adjacency[j][i] = adj;
    }
  }
  // BFS from every node; the 1-skeleton of a polytope is connected, but
  // report disconnection honestly if it ever arises.
  int diameter = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t w = 0; w < n; ++w) {
        if (sk.adjacency[v][w] && dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (dist[w] < 0) {
        sk.diameter = std::nullopt;
        return sk;
      }
      diameter = std::max(diameter, dist[w]);
    }
  }
  sk.diameter = diameter;
  return sk;
}

bool membership_in_polytope(const MultiGraph& g, const EdgeVector& x,
                            std::size_t budget) {
  require(is_matchable(g), ErrorCode::NotMatchable, "empty polytope");
  require(static_cast<int>(x.coords.size()) == g.m(), ErrorCode::BadParams,
          "vector length must equal edge count");
  for (const Rational& c : x.coords)
    if (c < 0) return false;
  std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g, budget);
  // One equality row per edge coordinate plus the convexity row.
  std::size_t rows = static_cast<std::size_t>(g.m()) + 1;
  std::vector<std::vector<Rational>> a(rows,
                                       std::vector<Rational>(pms.size(), Rational(0)));
  std::vector<Rational> b(rows, Rational(0));
  for (std::size_t k = 0; k < pms.size(); ++k) {
    for (int id : pms[k].edge_ids) a[id][k] = 1;
    a[g.m()][k] = 1;
  }
  for (int id = 0; id < g.m(); ++id) b[id] = x.coords[id];
  b[g.m()] = 1;
  return exact_feasible(a, b);
}

EdgeVector bvn_counterexample_vector(const MultiGraph& g,
                                     const ConformalBicycle& b) {
  require(b.parity == Parity::Odd, ErrorCode::WrongParity,
          "counterexample construction needs an odd bicycle");
  require(validate_bicycle(g, b), ErrorCode::PreconditionViolated,
          "bicycle does not validate against the host graph");
  EdgeVector x = zero_vector(g);
  for (int id : b.cycle1.edge_ids) x.coords[id] = Rational(1, 2);
  for (int id : b.cycle2.edge_ids) x.coords[id] = Rational(1, 2);
  for (int id : b.complement_matching.edge_ids) x.coords[id] = 1;
  return x;
}

}  // namespace matchkit
