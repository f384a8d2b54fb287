#include <sstream>

#include "doctest.h"
#include "matchkit/families.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"
#include "oracles.hpp"

using namespace matchkit;
namespace oracle = testing_oracles;

TEST_CASE("build_graph basics") {
  MultiGraph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);

  MultiGraph k4 = complete_graph(4);
  CHECK(k4.n() == 4);
  CHECK(k4.m() == 6);

  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), Error);
  try {
    build_graph(2, {{0, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopEdge);
  }
  try {
    build_graph(2, {{0, 5}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexOutOfRange);
  }
}

TEST_CASE("underlying_simple collapses multiplicities") {
  MultiGraph k2x3 = build_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  MultiGraph s = underlying_simple(k2x3);
  CHECK(s.m() == 1);
  CHECK(s.n() == 2);

  MultiGraph k4 = complete_graph(4);
  CHECK(underlying_simple(k4).m() == 6);

  MultiGraph w5_doubled = odd_wheel(2, {2, 1, 1, 1, 1});
  CHECK(w5_doubled.m() == 11);
  MultiGraph w5 = underlying_simple(w5_doubled);
  CHECK(w5.m() == 10);
  CHECK(are_isomorphic(w5, odd_wheel(2)).has_value());
}

TEST_CASE("cut_of") {
  MultiGraph k4 = complete_graph(4);
  Cut c = cut_of(k4, {0});
  CHECK(c.boundary.size() == 3);
  CHECK(c.trivial);

  Cut c6 = cut_of(cycle_graph(6), {0, 1, 2});
  CHECK(c6.boundary.size() == 2);
  CHECK_FALSE(c6.trivial);

  Cut k33 = cut_of(complete_bipartite(3, 3), {0, 1, 2});
  CHECK(k33.boundary.size() == 9);

  CHECK_THROWS_AS(cut_of(k4, {}), Error);
  CHECK_THROWS_AS(cut_of(k4, {0, 1, 2, 3}), Error);
}

TEST_CASE("cut boundary is symmetric in the shores") {
  MultiGraph g = cube_graph();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> shore, rest;
    for (int v = 0; v < g.n(); ++v) (rng() % 2 ? shore : rest).push_back(v);
    if (shore.empty() || rest.empty()) continue;
    Cut a = cut_of(g, shore);
    Cut b = cut_of(g, rest);
    CHECK(a.boundary == b.boundary);
  }
}

TEST_CASE("matching parity lemma: |M on boundary| = |S| mod 2") {
  for (const MultiGraph& g :
       {complete_graph(4), cube_graph(), complete_bipartite(3, 3), petersen_graph()}) {
    auto pms = enumerate_perfect_matchings(g);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<int> shore;
      for (int v = 0; v < g.n(); ++v)
        if (rng() % 2) shore.push_back(v);
      if (shore.empty() || static_cast<int>(shore.size()) == g.n()) continue;
      Cut c = cut_of(g, shore);
      for (const PerfectMatching& m : pms) {
        int hits = 0;
        for (int id : m.edge_ids)
          if (std::find(c.boundary.begin(), c.boundary.end(), id) != c.boundary.end())
            ++hits;
        CHECK(hits % 2 == static_cast<int>(shore.size()) % 2);
      }
    }
  }
}

TEST_CASE("enumerate_cycles on K4") {
  MultiGraph k4 = complete_graph(4);
  auto odd = enumerate_cycles(k4, ParityWant::Odd);
  CHECK(odd.size() == 4);  // the four triangles
  CHECK(odd.size() == static_cast<std::size_t>(oracle::brute_cycle_count(k4, 1)));
  auto all = enumerate_cycles(k4, ParityWant::Any);
  CHECK(static_cast<long>(all.size()) == oracle::brute_cycle_count(k4, -1));
  for (const CycleSeq& c : all) CHECK(is_valid_cycle(k4, c));
}

TEST_CASE("enumerate_cycles parity and multiplicity") {
  CHECK(enumerate_cycles(cycle_graph(6), ParityWant::Odd).empty());

  MultiGraph k2x2 = build_graph(2, {{0, 1}, {0, 1}});
  auto even = enumerate_cycles(k2x2, ParityWant::Even);
  REQUIRE(even.size() == 1);
  CHECK(even[0].length() == 2);
  CHECK(even[0].edge_ids == std::vector<int>{0, 1});

  // Three parallel edges give three unordered pairs.
  MultiGraph k2x3 = build_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(enumerate_cycles(k2x3, ParityWant::Even).size() == 3);
}

TEST_CASE("bipartite graphs have no odd cycle") {
  for (const MultiGraph& g :
       {complete_bipartite(3, 3), cube_graph(), cycle_graph(8)}) {
    CHECK(enumerate_cycles(g, ParityWant::Odd).empty());
  }
}

TEST_CASE("cycle enumeration is deterministic and budget-guarded") {
  MultiGraph k4 = complete_graph(4);
  auto first = enumerate_cycles(k4, ParityWant::Any);
  auto second = enumerate_cycles(k4, ParityWant::Any);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].vertices == second[i].vertices);
    CHECK(first[i].edge_ids == second[i].edge_ids);
  }
  CHECK_THROWS_AS(enumerate_cycles(k4, ParityWant::Any, 3), Error);
  try {
    enumerate_cycles(k4, ParityWant::Any, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
}

TEST_CASE("are_isomorphic") {
  MultiGraph k4 = complete_graph(4);
  auto id = are_isomorphic(k4, k4);
  REQUIRE(id.has_value());
  CHECK(verify_iso_witness(k4, k4, *id));

  CHECK_FALSE(are_isomorphic(complete_bipartite(3, 3),
                             norine_thomas(NorineThomasTag::Prism, 6)));

  // Doubling one spoke of a wheel is rotation-invariant.
  MultiGraph a = odd_wheel(2, {2, 1, 1, 1, 1});
  MultiGraph b = odd_wheel(2, {1, 1, 2, 1, 1});
  auto w = are_isomorphic(a, b);
  REQUIRE(w.has_value());
  CHECK(verify_iso_witness(a, b, *w));
  CHECK(oracle::brute_isomorphic(a, b));

  MultiGraph c = odd_wheel(2, {2, 2, 1, 1, 1});
  MultiGraph d = odd_wheel(2, {2, 1, 2, 1, 1});
  CHECK(are_isomorphic(c, d).has_value() == oracle::brute_isomorphic(c, d));
}

TEST_CASE("iso witnesses invert") {
  MultiGraph g = cube_graph();
  std::mt19937_64 rng(3);
  auto perm = oracle::random_permutation(rng, g.n());
  MultiGraph h = relabel(g, perm);
  auto w = are_isomorphic(g, h);
  REQUIRE(w.has_value());
  CHECK(verify_iso_witness(g, h, *w));
  IsoWitness back;
  back.mapping.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) back.mapping[w->mapping[v]] = v;
  CHECK(verify_iso_witness(h, g, back));
}

TEST_CASE("mcg file round trip") {
  MultiGraph g = murty_graph(1);
  std::string text = format_mcg(g, "murty graph, doubled a1a2");
  MultiGraph parsed = parse_mcg_string(text);
  CHECK(parsed.n() == g.n());
  CHECK(parsed.m() == g.m());
  for (int id = 0; id < g.m(); ++id) {
    CHECK(parsed.edge(id).u == g.edge(id).u);
    CHECK(parsed.edge(id).v == g.edge(id).v);
  }

  CHECK_THROWS_AS(parse_mcg_string("e 1 2\n"), Error);
  CHECK_THROWS_AS(parse_mcg_string("p mcg 2 2\ne 1 2\n"), Error);
  CHECK_THROWS_AS(parse_mcg_string("p mcg 2 1\ne 1 5\n"), Error);
  CHECK(parse_mcg_string("c hi\np mcg 2 1\ne 1 2\n").m() == 1);
}
