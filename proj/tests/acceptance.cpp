// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything here is exact; the only tolerances are wall-clock limits.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "matchkit/bicycle.hpp"
#include "matchkit/corpus.hpp"
#include "matchkit/families.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/polytope.hpp"
#include "matchkit/recognizer.hpp"
#include "matchkit/retract.hpp"
#include "matchkit/serialize.hpp"
#include "matchkit/thin_edges.hpp"
#include "matchkit/tight_cut.hpp"

using namespace matchkit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20250810;

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& name, double limit_seconds,
                 const std::function<std::string()>& run) {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = run();
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
            .count() /
        1000.0;
    if (seconds > limit_seconds) {
      ok = false;
      detail += " [over the " + std::to_string(limit_seconds) + "s limit]";
    }
    if (detail.rfind("FAIL", 0) == 0) ok = false;
    std::printf("%s  criterion %2d: %s (%s, %.1fs)\n", ok ? "PASS" : "FAIL",
                number, name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

// Shared corpus: all connected simple graphs per even order, generated once.
struct Corpus {
  std::vector<MultiGraph> by_order[9];  // index = order
  Corpus() {
    for (int n = 2; n <= 8; n += 2) by_order[n] = all_connected_graphs(n);
  }
};

std::string fmt_count(const char* label, long n) {
  return std::string(label) + "=" + std::to_string(n);
}

// --- criterion 1 ---

std::string named_graph_table() {
  struct Row {
    std::string name;
    MultiGraph g;
    bool bvn;
    bool pmc;
  };
  std::vector<Row> rows;
  rows.push_back({"K4", complete_graph(4), true, true});
  rows.push_back({"C6bar", norine_thomas(NorineThomasTag::Prism, 6), false, true});
  rows.push_back({"K33", complete_bipartite(3, 3), true, true});
  rows.push_back({"cube", cube_graph(), true, false});
  rows.push_back({"K4_splice_K33", k4_splice_k33(), true, true});
  rows.push_back({"Murty", murty_graph(0), true, true});
  rows.push_back({"W5", odd_wheel(2), true, true});
  rows.push_back({"W7", odd_wheel(3), true, true});
  rows.push_back({"W9", odd_wheel(4), true, true});

  // Petersen: bvn is false; its PM-compactness is derived twice (direct
  // search and skeleton diameter) and the derivations must agree.
  MultiGraph pet = petersen_graph();
  bool pet_pmc = decide_pmc_oracle(pet).verdict;
  bool pet_dia = build_skeleton(pet).diameter <= 1;
  if (pet_pmc != pet_dia) return "FAIL: Petersen pmc derivations disagree";
  rows.push_back({"Petersen", pet, false, pet_pmc});

  for (const Row& row : rows) {
    auto start = Clock::now();
    OracleClassification o = classify_oracle(row.g);
    Decision d = decide_structural(row.g, false);
    double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
            .count() /
        1000.0;
    if (o.bvn != row.bvn || o.pmc != row.pmc)
      return "FAIL: oracle verdicts wrong for " + row.name;
    if (d.both_properties != (row.bvn && row.pmc))
      return "FAIL: structural verdict wrong for " + row.name;
    if (secs > 10.0) return "FAIL: " + row.name + " exceeded 10s";
  }
  return fmt_count("graphs", static_cast<long>(rows.size()));
}

// --- criterion 2 ---

PerfectMatching matching_of_rest(const MultiGraph& g, const CycleSeq& c1,
                                 const CycleSeq& c2) {
  std::vector<char> keep(g.n(), 1);
  for (int v : c1.vertices) keep[v] = 0;
  for (int v : c2.vertices) keep[v] = 0;
  std::vector<int> old_ids;
  MultiGraph sub = induced_subgraph(g, keep, nullptr, &old_ids);
  auto pms = enumerate_perfect_matchings(sub);
  PerfectMatching out;
  if (pms.empty()) return out;
  for (int id : pms[0].edge_ids) out.edge_ids.push_back(old_ids[id]);
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

std::string p_family_reproduction() {
  for (int k = 2; k <= 5; ++k) {
    MultiGraph p = p_brick(k);
    OracleClassification o = classify_oracle(p);
    if (o.bvn || !o.pmc)
      return "FAIL: P" + std::to_string(2 * k + 1) + " verdicts wrong";
    if (!o.odd_witness || !validate_bicycle(p, *o.odd_witness))
      return "FAIL: returned odd certificate invalid for k=" + std::to_string(k);

    // The construction from the source: the pendant triangle
    // (v0, u1, u0) plus the odd rim cycle through v2.
    int rim = 2 * k + 1;
    int u1 = rim, v2 = rim + 2, u0 = rim + 3, v0 = rim + 4;
    int m = p.m();
    CycleSeq tri;
    tri.vertices = {v0, u1, u0};
    tri.edge_ids = {m - 2, m - 4, m - 3};  // v0u1, u1u0, u0v0
    CycleSeq rim_cycle;
    if (k == 2) {
      rim_cycle.vertices = {0, v2, 4};
      rim_cycle.edge_ids = {rim, rim + 1, 4};  // w0v2, v2w4, w4w0
    } else {
      rim_cycle.vertices = {0, v2};
      rim_cycle.edge_ids = {rim, rim + 1};
      for (int w = 4; w <= 2 * k; ++w) {
        rim_cycle.vertices.push_back(w);
        if (w < 2 * k) rim_cycle.edge_ids.push_back(w);
      }
      rim_cycle.edge_ids.push_back(2 * k);  // w_{2k} back to w0
    }
    ConformalBicycle proof_shape;
    proof_shape.cycle1 = tri;
    proof_shape.cycle2 = rim_cycle;
    proof_shape.parity = Parity::Odd;
    proof_shape.complement_matching = matching_of_rest(p, tri, rim_cycle);
    if (!validate_bicycle(p, proof_shape))
      return "FAIL: proof-shape bicycle does not validate for k=" +
             std::to_string(k);
  }
  return "k=2..5";
}

// --- criterion 3 ---

std::string crossval_exhaustive() {
  cli::CommandResult r =
      cli::cmd_crossval(8, kSeed, kDefaultBudget, 1000, nullptr);
  if (r.exit_code != cli::kExitBoth)
    return "FAIL: crossval exit " + std::to_string(r.exit_code);
  long covered = 0;
  for (auto& [order, stats] : r.report["orders"].items())
    covered += stats["matching_covered"].get<long>();
  return fmt_count("matching_covered", covered) + " " +
         fmt_count("perturbations", 1000) + " disagreements=0";
}

// --- criterion 4 ---

std::string skeleton_vs_even_bicycle(const Corpus& corpus) {
  long checked = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (const MultiGraph& g : corpus.by_order[n]) {
      if (!is_matchable(g)) continue;
      ++checked;
      bool no_even = !find_conformal_bicycle(g, ParityWant::Even).has_value();
      auto sk = build_skeleton(g);
      bool dia = sk.diameter.has_value() && *sk.diameter <= 1;
      if (no_even != dia) return "FAIL: mismatch on a graph of order " +
                                 std::to_string(n);
    }
  }
  return fmt_count("matchable_graphs", checked);
}

// --- criterion 5 ---

std::string lovasz_invariance(const Corpus& corpus) {
  std::vector<MultiGraph> hosts;
  hosts.push_back(k4_splice_k33());
  for (int n : {6, 8}) {
    for (const MultiGraph& g : corpus.by_order[n]) {
      if (hosts.size() >= 24) break;
      if (!is_matching_covered(g)) continue;
      if (!all_nontrivial_tight_cuts(g).empty()) hosts.push_back(g);
    }
  }
  if (hosts.size() < 20) return "FAIL: fewer than 20 decomposable hosts";

  auto leaf_key = [](const DecompositionTree& tree) {
    std::vector<MultiGraph> leaves;
    for (const DecompositionNode* leaf : decomposition_leaves(tree))
      leaves.push_back(underlying_simple(leaf->graph));
    return leaves;
  };
  auto same_multiset = [](std::vector<MultiGraph> a, std::vector<MultiGraph> b) {
    if (a.size() != b.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (const MultiGraph& x : a) {
      bool hit = false;
      for (std::size_t i = 0; i < b.size() && !hit; ++i) {
        if (!used[i] && are_isomorphic(x, b[i])) {
          used[i] = 1;
          hit = true;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  for (const MultiGraph& g : hosts) {
    auto [ref_tree, ref_b] = tight_cut_decomposition(g);
    auto ref_leaves = leaf_key(ref_tree);
    for (std::uint64_t s = 0; s < 50; ++s) {
      auto [tree, b] = tight_cut_decomposition_random(g, kSeed + s);
      if (b.value != ref_b.value) return "FAIL: brick count varies";
      if (!same_multiset(leaf_key(tree), ref_leaves))
        return "FAIL: leaf multiset varies";
    }
  }

  // The splice of K4 and K33 always yields exactly those two leaves.
  auto [tree, b] = tight_cut_decomposition(k4_splice_k33());
  if (b.value != 1) return "FAIL: splice b != 1";
  auto leaves = decomposition_leaves(tree);
  bool k4_leaf = false, k33_leaf = false;
  for (const DecompositionNode* leaf : leaves) {
    if (are_isomorphic(underlying_simple(leaf->graph), complete_graph(4)))
      k4_leaf = true;
    if (are_isomorphic(underlying_simple(leaf->graph), complete_bipartite(3, 3)))
      k33_leaf = true;
  }
  if (leaves.size() != 2 || !k4_leaf || !k33_leaf)
    return "FAIL: splice leaves are not {K4, K33}";
  return fmt_count("hosts", static_cast<long>(hosts.size())) + " x50 orders";
}

// --- criterion 6 ---

MultiGraph subdivide_edge_twice(const MultiGraph& g, int id) {
  std::vector<std::pair<int, int>> pairs;
  int p = g.n(), q = g.n() + 1;
  for (int e = 0; e < g.m(); ++e) {
    if (e == id) continue;
    pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  pairs.emplace_back(g.edge(id).u, p);
  pairs.emplace_back(p, q);
  pairs.emplace_back(q, g.edge(id).v);
  return build_graph(g.n() + 2, pairs);
}

std::string retract_properties() {
  std::vector<MultiGraph> bases{complete_graph(4),
                                odd_wheel(2),
                                odd_wheel(3),
                                complete_bipartite(3, 3),
                                cube_graph(),
                                cycle_graph(6),
                                cycle_graph(8),
                                norine_thomas(NorineThomasTag::Prism, 6),
                                k4_splice_k33(),
                                murty_graph(0),
                                p_brick(2)};
  std::mt19937_64 rng(kSeed);
  long tested = 0;
  for (int t = 0; t < 200; ++t) {
    MultiGraph g = bases[rng() % bases.size()];
    int rounds = static_cast<int>(rng() % 3);
    for (int i = 0; i < rounds; ++i)
      g = subdivide_edge_twice(g, static_cast<int>(rng() % g.m()));
    if (!is_matching_covered(g)) return "FAIL: corpus member not matching covered";
    ++tested;
    RetractResult ref = retract_of(g);
    for (int s = 0; s < 3; ++s) {
      RetractResult r = retract_of_random(g, rng());
      if (!are_isomorphic(r.graph, ref.graph))
        return "FAIL: retract depends on the order";
    }
    if (decide_bvn_oracle(g).verdict != decide_bvn_oracle(ref.graph).verdict)
      return "FAIL: BvN changes under retract";
    if (decide_pmc_oracle(g).verdict != decide_pmc_oracle(ref.graph).verdict)
      return "FAIL: PM-compactness changes under retract";
  }
  return fmt_count("graphs", tested);
}

// --- criterion 7 ---

MultiGraph two_k5_bridge() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 0 && j == 1)) pairs.emplace_back(i, j);
  for (int i = 5; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (!(i == 5 && j == 6)) pairs.emplace_back(i, j);
  pairs.emplace_back(0, 5);
  pairs.emplace_back(1, 6);
  return build_graph(10, pairs);
}

MultiGraph thickened_c6() {
  // C6 with the non-boundary edges doubled: minimum degree three with a
  // two-edge nontrivial tight cut.
  return build_graph(6, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 4},
                         {4, 5}, {4, 5}, {5, 0}});
}

std::string widen_lemma(const Corpus& corpus) {
  std::vector<MultiGraph> hosts{two_k5_bridge(), thickened_c6()};
  for (int n : {6, 8}) {
    for (const MultiGraph& g : corpus.by_order[n]) {
      if (!is_matching_covered(g)) continue;
      hosts.push_back(g);
    }
  }
  long instances = 0;
  for (const MultiGraph& g : hosts) {
    bool min_deg3 = true;
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) < 3) min_deg3 = false;
    if (!min_deg3) continue;
    for (const Cut& c : all_nontrivial_tight_cuts(g)) {
      if (c.boundary.size() != 2) continue;
      ++instances;
      Cut wide = widen_two_edge_tight_cut(g, c);
      if (wide.trivial || wide.boundary.size() < 4 || !is_tight_cut(g, wide))
        return "FAIL: widened cut invalid";
    }
  }
  if (instances == 0)
    return "FAIL: corpus search certified no 2-edge instance; expected two fixtures";
  return fmt_count("instances", instances);
}

// --- criterion 8 ---

std::string reduction_suite(const Corpus& corpus) {
  std::vector<MultiGraph> bricks;
  bricks.push_back(complete_graph(4));
  for (int n : {6, 8}) {
    for (const MultiGraph& g : corpus.by_order[n]) {
      if (!is_matching_covered(g) || g.is_bipartite()) continue;
      if (is_brick(g)) bricks.push_back(g);
    }
  }
  MultiGraph prism6 = norine_thomas(NorineThomasTag::Prism, 6);
  long with_thin = 0, exceptions = 0;
  for (const MultiGraph& g : bricks) {
    ReductionTrace trace = reduce_to_norine_thomas(g);  // throws if stuck
    MultiGraph current = g;
    for (const ReductionStep& s : trace.steps) {
      ThinEdgeReport r = is_thin_edge(s.graph, s.deleted_edge);
      if (!r.strictly_thin || *r.index != s.index)
        return "FAIL: trace step does not re-validate";
      current = *r.retract_after_deletion;
    }
    if (!are_isomorphic(trace.terminal, current))
      return "FAIL: trace terminal mismatch";

    bool has_thin = false;
    for (int id = 0; id < g.m() && !has_thin; ++id)
      has_thin = is_thin_edge(g, id).thin;
    bool exceptional = are_isomorphic(g, complete_graph(4)).has_value() ||
                       are_isomorphic(g, prism6).has_value();
    if (has_thin == exceptional) return "FAIL: thin-edge existence wrong";
    if (has_thin)
      ++with_thin;
    else
      ++exceptions;
  }
  if (exceptions != 2) return "FAIL: expected exactly K4 and the prism";

  // Odd wheels W5..W11 and Petersen have no strictly thin edge.
  for (int k = 2; k <= 5; ++k)
    if (find_strictly_thin_edge(odd_wheel(k)))
      return "FAIL: W" + std::to_string(2 * k + 1) + " has a strictly thin edge";
  if (find_strictly_thin_edge(petersen_graph()))
    return "FAIL: Petersen has a strictly thin edge";

  ReductionTrace murty = reduce_to_norine_thomas(murty_graph(0));
  if (murty.steps.size() != 1 || murty.steps[0].index != 1 ||
      !are_isomorphic(murty.terminal, odd_wheel(2)))
    return "FAIL: Murty reduction shape";

  return fmt_count("bricks", static_cast<long>(bricks.size()));
}

// --- criterion 9 ---

std::string case_analysis_additions() {
  long checked = 0;
  for (int k : {2, 3}) {
    MultiGraph w = odd_wheel(k);
    int rim = 2 * k + 1;
    for (int u = 0; u < rim; ++u) {
      for (int v = u + 1; v < rim; ++v) {
        MultiGraph g = add_edge(w, u, v);
        if (!find_conformal_bicycle(g, ParityWant::Any))
          return "FAIL: wheel rim addition has no bicycle";
        ++checked;
      }
    }
  }
  MultiGraph murty = murty_graph(0);
  for (int u = 0; u < 8; ++u) {
    for (int v = u + 1; v < 8; ++v) {
      if (u == 0 && v == 1) continue;  // both ends noncubic
      MultiGraph g = add_edge(murty, u, v);
      if (!find_conformal_bicycle(g, ParityWant::Any))
        return "FAIL: Murty addition has no bicycle";
      ++checked;
    }
  }
  return fmt_count("additions", checked);
}

// --- criterion 10 ---

std::string polytope_membership(const Corpus& corpus) {
  for (const MultiGraph& g :
       {norine_thomas(NorineThomasTag::Prism, 6), petersen_graph()}) {
    auto b = find_conformal_bicycle(g, ParityWant::Odd);
    if (!b) return "FAIL: no odd bicycle found";
    EdgeVector x = bvn_counterexample_vector(g, *b);
    for (const Rational& c : x.coords)
      if (c < 0) return "FAIL: counterexample vector negative";
    if (!is_one_regular(g, x)) return "FAIL: counterexample vector not 1-regular";
    if (membership_in_polytope(g, x))
      return "FAIL: counterexample vector accepted";
  }

  std::mt19937_64 rng(kSeed);
  long graphs = 0, combos = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (const MultiGraph& g : corpus.by_order[n]) {
      if (!g.is_bipartite() || !is_matching_covered(g)) continue;
      ++graphs;
      auto pms = enumerate_perfect_matchings(g);
      for (int t = 0; t < 100; ++t) {
        std::vector<long> weights(pms.size());
        long total = 0;
        for (auto& w : weights) {
          w = static_cast<long>(rng() % 100);
          total += w;
        }
        if (total == 0) {
          weights[0] = 1;
          total = 1;
        }
        EdgeVector x = zero_vector(g);
        for (std::size_t i = 0; i < pms.size(); ++i) {
          if (weights[i] == 0) continue;
          Rational lambda(weights[i], total);
          for (int id : pms[i].edge_ids) x.coords[id] += lambda;
        }
        if (!is_one_regular(g, x)) return "FAIL: convex combination not 1-regular";
        if (!membership_in_polytope(g, x))
          return "FAIL: convex combination rejected";
        ++combos;
      }
    }
  }
  return fmt_count("bipartite_graphs", graphs) + " " + fmt_count("combos", combos);
}

}  // namespace

int main() {
  std::printf("matchkit acceptance suite\n");
  Harness h;
  Corpus corpus;

  h.criterion(1, "named-graph verdict table", 10.0 * 10, named_graph_table);
  h.criterion(2, "P-family verdicts and proof-shape certificates", 120.0,
              p_family_reproduction);
  h.criterion(3, "structural vs oracle crossval, orders 4-8 plus perturbations",
              1800.0, crossval_exhaustive);
  h.criterion(4, "skeleton diameter <= 1 iff no even bicycle", 1800.0,
              [&] { return skeleton_vs_even_bicycle(corpus); });
  h.criterion(5, "leaf list invariance over random decompositions", 1800.0,
              [&] { return lovasz_invariance(corpus); });
  h.criterion(6, "retract order-independence and verdict invariance", 1800.0,
              retract_properties);
  h.criterion(7, "two-edge tight cuts widen to tight cuts with >= 4 edges",
              1800.0, [&] { return widen_lemma(corpus); });
  h.criterion(8, "every small simple brick reduces to a terminal family",
              1200.0, [&] { return reduction_suite(corpus); });
  h.criterion(9, "edge additions to wheels and Murty create bicycles", 1800.0,
              case_analysis_additions);
  h.criterion(10, "exact membership accepts hull points, rejects the half-vectors",
              1800.0, [&] { return polytope_membership(corpus); });

  if (h.failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", h.failures);
  return 1;
}
