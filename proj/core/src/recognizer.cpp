#include "matchkit/recognizer.hpp"

#include <algorithm>

#include "matchkit/families.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/tight_cut.hpp"

namespace matchkit {

const char* family_variant_name(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::K2Multi: return "K2Multi";
    case FamilyVariant::K33: return "K33";
    case FamilyVariant::K4Multi: return "K4Multi";
    case FamilyVariant::OddWheelMultiSpokes: return "OddWheelMultiSpokes";
    case FamilyVariant::K4SpliceK33: return "K4SpliceK33";
    case FamilyVariant::MurtyMulti: return "MurtyMulti";
  }
  return "?";
}

namespace {

std::optional<FamilyTag> match_k2(const MultiGraph& g) {
  if (g.n() != 2) return std::nullopt;
  FamilyTag tag;
  tag.variant = FamilyVariant::K2Multi;
  std::vector<std::pair<int, int>> pairs(g.m(), {0, 1});
  tag.canonical = build_graph(2, pairs);
  tag.witness = IsoWitness{{0, 1}};
  return tag;
}

std::optional<FamilyTag> match_k33(const MultiGraph& g) {
  if (g.n() != 6 || !g.is_simple()) return std::nullopt;
  MultiGraph canonical = complete_bipartite(3, 3);
  auto w = are_isomorphic(g, canonical);
  if (!w) return std::nullopt;
  FamilyTag tag;
  tag.variant = FamilyVariant::K33;
  tag.witness = *w;
  tag.canonical = std::move(canonical);
  return tag;
}

std::optional<FamilyTag> match_k4(const MultiGraph& g) {
  if (g.n() != 4) return std::nullopt;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (g.multiplicity(u, v) == 0) return std::nullopt;
  // Two vertex-disjoint cycles in a K4 multigraph can only be two
  // disjoint 2-cycles; forbid multiplicity >= 2 on both slots of any of
  // the three perfect pairings.
  static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (auto& p : pairings) {
    if (g.multiplicity(p[0], p[1]) >= 2 && g.multiplicity(p[2], p[3]) >= 2)
      return std::nullopt;
  }
  FamilyTag tag;
  tag.variant = FamilyVariant::K4Multi;
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  tag.canonical = build_graph(4, pairs);
  tag.witness = IsoWitness{{0, 1, 2, 3}};
  return tag;
}

std::optional<FamilyTag> match_odd_wheel(const MultiGraph& g) {
  int n = g.n();
  if (n < 6 || n % 2 != 0) return std::nullopt;
  int rim_len = n - 1;
  // The hub is the unique vertex adjacent to all others; rim vertices
  // keep three distinct neighbours.
  int hub = -1;
  for (int v = 0; v < n; ++v) {
    if (g.distinct_neighbour_count(v) == rim_len) {
      if (hub != -1) return std::nullopt;
      hub = v;
    }
  }
  if (hub == -1) return std::nullopt;
  // Rim: the remaining vertices must induce a simple cycle, simple in g.
  std::vector<int> rim;
  for (int v = 0; v < n; ++v)
    if (v != hub) rim.push_back(v);
  for (int v : rim) {
    int rim_neighbours = 0;
    for (int w : g.distinct_neighbours(v)) {
      if (w == hub) continue;
      if (g.multiplicity(v, w) != 1) return std::nullopt;  // rim must stay simple
      ++rim_neighbours;
    }
    if (rim_neighbours != 2) return std::nullopt;
  }
  // Walk the rim from its smallest vertex toward its smaller neighbour.
  int start = rim[0];
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  int prev = -1, cur = start;
  for (int step = 0; step < rim_len; ++step) {
    order.push_back(cur);
    seen[cur] = 1;
    std::vector<int> nexts;
    for (int w : g.distinct_neighbours(cur))
      if (w != hub && w != prev) nexts.push_back(w);
    if (step + 1 == rim_len) break;
    std::sort(nexts.begin(), nexts.end());
    int nxt = -1;
    for (int w : nexts) {
      if (!seen[w]) {
        nxt = w;
        break;
      }
    }
    if (nxt == -1) return std::nullopt;  // rim is not a single cycle
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(order.size()) != rim_len) return std::nullopt;
  if (g.multiplicity(order.back(), order.front()) != 1) return std::nullopt;

  int k = (n - 2) / 2;
  std::vector<int> spoke_mults(rim_len);
  std::vector<int> mapping(n);
  for (int i = 0; i < rim_len; ++i) {
    mapping[order[i]] = i;
    spoke_mults[i] = g.multiplicity(hub, order[i]);
    if (spoke_mults[i] < 1) return std::nullopt;
  }
  mapping[hub] = rim_len;
  FamilyTag tag;
  tag.variant = FamilyVariant::OddWheelMultiSpokes;
  tag.k = k;
  tag.canonical = odd_wheel(k, spoke_mults);
  tag.witness = IsoWitness{mapping};
  return tag;
}

std::optional<FamilyTag> match_k4_splice_k33(const MultiGraph& g) {
  if (g.n() != 8 || !g.is_simple()) return std::nullopt;
  MultiGraph canonical = k4_splice_k33();
  auto w = are_isomorphic(g, canonical);
  if (!w) return std::nullopt;
  FamilyTag tag;
  tag.variant = FamilyVariant::K4SpliceK33;
  tag.witness = *w;
  tag.canonical = std::move(canonical);
  return tag;
}

std::optional<FamilyTag> match_murty(const MultiGraph& g) {
  if (g.n() != 8) return std::nullopt;
  MultiGraph us = underlying_simple(g);
  if (!are_isomorphic(us, murty_graph(0))) return std::nullopt;
  // Extra multiplicity is allowed only between the two noncubic
  // vertices (the unique adjacent degree-four pair of the underlying
  // graph).
  int extra = 0;
  for (int u = 0; u < 8; ++u) {
    for (int v = u + 1; v < 8; ++v) {
      int mult = g.multiplicity(u, v);
      if (mult < 2) continue;
      if (us.degree(u) != 4 || us.degree(v) != 4) return std::nullopt;
      extra = mult - 1;
    }
  }
  MultiGraph canonical = murty_graph(extra);
  auto w = are_isomorphic(g, canonical);
  if (!w) return std::nullopt;
  FamilyTag tag;
  tag.variant = FamilyVariant::MurtyMulti;
  tag.witness = *w;
  tag.canonical = std::move(canonical);
  return tag;
}

}  // namespace

std::optional<FamilyTag> classify_family(const MultiGraph& g) {
  require(is_matching_covered(g), ErrorCode::PreconditionViolated,
          "family classification needs a matching covered graph");
  if (g.n() != 2) {
    for (int v = 0; v < g.n(); ++v)
      require(g.degree(v) >= 3, ErrorCode::PreconditionViolated,
              "family classification needs minimum degree three or order two");
  }
  if (auto t = match_k2(g)) return t;
  if (auto t = match_k33(g)) return t;
  if (auto t = match_k4(g)) return t;
  if (auto t = match_odd_wheel(g)) return t;
  if (auto t = match_k4_splice_k33(g)) return t;
  if (auto t = match_murty(g)) return t;
  return std::nullopt;
}

Decision decide_structural(const MultiGraph& g, bool want_witness,
                           std::size_t budget) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "the structural decision is defined for matching covered graphs");
  Decision d;
  d.retract_used = retract_of(g);
  d.positive_certificate = classify_family(d.retract_used.graph);
  d.both_properties = d.positive_certificate.has_value();
  if (!d.both_properties) {
    if (!want_witness) {
      d.witness_omitted = true;
      return d;
    }
    try {
      d.negative_certificate = find_conformal_bicycle(g, ParityWant::Any, budget);
      if (!d.negative_certificate) d.witness_omitted = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
      d.witness_omitted = true;
    }
  }
  return d;
}

bool decide_brick_structural(const MultiGraph& g) {
  bool brick = false;
  try {
    brick = is_brick(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooSmall) throw;
  }
  require(brick, ErrorCode::NotABrick, "input is not a brick");
  auto tag = classify_family(g);
  if (!tag) return false;
  return tag->variant == FamilyVariant::K4Multi ||
         tag->variant == FamilyVariant::OddWheelMultiSpokes ||
         tag->variant == FamilyVariant::MurtyMulti;
}

}  // namespace matchkit
