#include <benchmark/benchmark.h>

#include "matchkit/bicycle.hpp"
#include "matchkit/corpus.hpp"
#include "matchkit/families.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/polytope.hpp"
#include "matchkit/recognizer.hpp"
#include "matchkit/retract.hpp"
#include "matchkit/tight_cut.hpp"

using namespace matchkit;

static void BM_EnumerateMatchingsPetersen(benchmark::State& state) {
  MultiGraph g = petersen_graph();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_perfect_matchings(g));
}
BENCHMARK(BM_EnumerateMatchingsPetersen);

static void BM_EnumerateMatchingsK8(benchmark::State& state) {
  MultiGraph g = complete_graph(8);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_perfect_matchings(g));
}
BENCHMARK(BM_EnumerateMatchingsK8);

static void BM_OddBicycleSearchP9(benchmark::State& state) {
  MultiGraph g = p_brick(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_conformal_bicycle(g, ParityWant::Odd));
}
BENCHMARK(BM_OddBicycleSearchP9);

static void BM_EvenOracleCube(benchmark::State& state) {
  MultiGraph g = cube_graph();
  for (auto _ : state) benchmark::DoNotOptimize(decide_pmc_oracle(g));
}
BENCHMARK(BM_EvenOracleCube);

static void BM_TightCutDecomposition(benchmark::State& state) {
  MultiGraph g = k4_splice_k33();
  for (auto _ : state) benchmark::DoNotOptimize(tight_cut_decomposition(g));
}
BENCHMARK(BM_TightCutDecomposition);

static void BM_StructuralDecisionMurty(benchmark::State& state) {
  MultiGraph g = murty_graph(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(decide_structural(g, false));
}
BENCHMARK(BM_StructuralDecisionMurty);

static void BM_MembershipK33Uniform(benchmark::State& state) {
  MultiGraph g = complete_bipartite(3, 3);
  EdgeVector x = zero_vector(g);
  for (auto& c : x.coords) c = Rational(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(membership_in_polytope(g, x));
}
BENCHMARK(BM_MembershipK33Uniform);

static void BM_IsomorphismPetersenRelabelled(benchmark::State& state) {
  MultiGraph g = petersen_graph();
  std::vector<int> perm{3, 1, 4, 0, 5, 9, 2, 6, 8, 7};
  MultiGraph h = relabel(g, perm);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, h));
}
BENCHMARK(BM_IsomorphismPetersenRelabelled);

static void BM_Corpus6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_connected_graphs(6));
}
BENCHMARK(BM_Corpus6);

BENCHMARK_MAIN();
