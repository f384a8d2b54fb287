#include "matchkit/bicycle.hpp"

#include <algorithm>

namespace matchkit {

namespace {

struct RankedCycle {
  CycleSeq cycle;
  std::vector<int> key;
  Bits mask;
};

std::vector<RankedCycle> ranked_cycles(const MultiGraph& g, ParityWant want,
                                       std::size_t budget) {
  std::vector<RankedCycle> out;
  for (CycleSeq& c : enumerate_cycles(g, want, budget)) {
    RankedCycle rc;
    rc.key = canonical_cycle_key(c);
    rc.mask = vertex_mask(g, c.vertices);
    rc.cycle = std::move(c);
    out.push_back(std::move(rc));
  }
  std::sort(out.begin(), out.end(), [](const RankedCycle& a, const RankedCycle& b) {
    if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
    return a.key < b.key;
  });
  return out;
}

PerfectMatching matching_of_remainder(const MultiGraph& g, const Bits& alive) {
  std::vector<char> keep(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    if (alive.test(v)) keep[v] = 1;
  std::vector<int> old_edges;
  MultiGraph sub = induced_subgraph(g, keep, nullptr, &old_edges);
  // One matching suffices; take the first in enumeration order.
  std::vector<char> covered(sub.n(), 0);
  PerfectMatching result;
  struct Rec {
    const MultiGraph& s;
    std::vector<char>& cov;
    std::vector<int> chosen;
    bool done = false;
    std::vector<int> found;
    void go(int uncovered) {
      if (done) return;
      if (uncovered == 0) {
        found = chosen;
        done = true;
        return;
      }
      int v = -1;
      for (int i = 0; i < s.n(); ++i)
        if (!cov[i]) {
          v = i;
          break;
        }
      for (auto [to, id] : s.incident(v)) {
        if (cov[to]) continue;
        cov[v] = cov[to] = 1;
        chosen.push_back(id);
        go(uncovered - 2);
        chosen.pop_back();
        cov[v] = cov[to] = 0;
        if (done) return;
      }
    }
  } rec{sub, covered, {}, false, {}};
  rec.go(sub.n());
  for (int id : rec.found) result.edge_ids.push_back(old_edges[id]);
  std::sort(result.edge_ids.begin(), result.edge_ids.end());
  return result;
}

}  // namespace

bool validate_bicycle(const MultiGraph& g, const ConformalBicycle& b) {
  if (!is_valid_cycle(g, b.cycle1) || !is_valid_cycle(g, b.cycle2)) return false;
  bool odd1 = b.cycle1.odd(), odd2 = b.cycle2.odd();
  if (odd1 != odd2) return false;  // mixed parity is never a valid certificate
  if (b.parity == Parity::Odd && !odd1) return false;
  if (b.parity == Parity::Even && odd1) return false;
  Bits m1 = vertex_mask(g, b.cycle1.vertices);
  Bits m2 = vertex_mask(g, b.cycle2.vertices);
  if (m1.intersects(m2)) return false;
  // Complement matching must cover exactly the remaining vertices.
  std::vector<char> covered(g.n(), 0);
  std::vector<char> used(g.m(), 0);
  for (int id : b.complement_matching.edge_ids) {
    if (id < 0 || id >= g.m() || used[id]) return false;
    used[id] = 1;
    const Edge& e = g.edge(id);
    if (m1.test(e.u) || m1.test(e.v) || m2.test(e.u) || m2.test(e.v)) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  for (int v = 0; v < g.n(); ++v) {
    if (m1.test(v) || m2.test(v)) continue;
    if (!covered[v]) return false;
  }
  return true;
}

std::optional<ConformalBicycle> find_conformal_bicycle(const MultiGraph& g,
                                                       ParityWant want,
                                                       std::size_t budget) {
  require(is_matchable(g), ErrorCode::NotMatchable,
          "conformal bicycle search needs a matchable host");
  std::vector<RankedCycle> cycles = ranked_cycles(g, want, budget);
  SubsetMatcher matcher(g);
  Bits full(g.n());
  for (int v = 0; v < g.n(); ++v) full.set(v);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[i].cycle.odd() != cycles[j].cycle.odd()) continue;
      if (cycles[i].mask.intersects(cycles[j].mask)) continue;
      if (++checks > budget)
        fail(ErrorCode::BudgetExhausted,
             "bicycle search truncated after " + std::to_string(budget) +
                 " conformality checks");
      Bits alive = full;
      for (int v : cycles[i].cycle.vertices) alive.reset(v);
      for (int v : cycles[j].cycle.vertices) alive.reset(v);
      if (!matcher.matchable(alive)) continue;
      ConformalBicycle b;
      b.cycle1 = cycles[i].cycle;
      b.cycle2 = cycles[j].cycle;
      b.complement_matching = matching_of_remainder(g, alive);
      b.parity = cycles[i].cycle.odd() ? Parity::Odd : Parity::Even;
      return b;
    }
  }
  return std::nullopt;
}

OracleDecision decide_bvn_oracle(const MultiGraph& g, std::size_t budget) {
  auto witness = find_conformal_bicycle(g, ParityWant::Odd, budget);
  return {!witness.has_value(), std::move(witness)};
}

OracleDecision decide_pmc_oracle(const MultiGraph& g, std::size_t budget) {
  require(is_matchable(g), ErrorCode::NotMatchable,
          "PM-compactness oracle needs a matchable host");
  std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g, budget);
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i + 1; j < pms.size(); ++j) {
      std::vector<CycleSeq> cycles = symmetric_difference_cycles(g, pms[i], pms[j]);
      if (cycles.size() < 2) continue;
      std::sort(cycles.begin(), cycles.end(),
                [](const CycleSeq& a, const CycleSeq& b) {
                  if (a.length() != b.length()) return a.length() < b.length();
                  return canonical_cycle_key(a) < canonical_cycle_key(b);
                });
      ConformalBicycle b;
      b.cycle1 = cycles[0];
      b.cycle2 = cycles[1];
      b.parity = Parity::Even;
      // The cycles of a symmetric difference are matched internally by
      // either matching, so pms[i] restricted to the remainder is a
      // perfect matching of it.
      Bits drop = vertex_mask(g, b.cycle1.vertices);
      drop |= vertex_mask(g, b.cycle2.vertices);
      for (int id : pms[i].edge_ids) {
        const Edge& e = g.edge(id);
        if (!drop.test(e.u) && !drop.test(e.v))
          b.complement_matching.edge_ids.push_back(id);
      }
      return {false, std::move(b)};
    }
  }
  return {true, std::nullopt};
}

OracleClassification classify_oracle(const MultiGraph& g, std::size_t budget) {
  require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
          "classification is defined for matching covered graphs");
  OracleDecision bvn = decide_bvn_oracle(g, budget);
  OracleDecision pmc = decide_pmc_oracle(g, budget);
  return {bvn.verdict, pmc.verdict, std::move(bvn.witness), std::move(pmc.witness)};
}

}  // namespace matchkit
