#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "matchkit/bicycle.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

/// All polytope arithmetic is exact; membership and 1-regularity are
/// yes/no questions with no tolerance.
using Rational = boost::multiprecision::cpp_rational;

/// Edge-indexed rational vector over a host graph; missing coordinates
/// default to zero at construction.
struct EdgeVector {
  std::vector<Rational> coords;  // indexed by edge id
};

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

EdgeVector zero_vector(const MultiGraph& g);

EdgeVector incidence_vector(const MultiGraph& g, const PerfectMatching& m);

/// x(boundary(v)) == 1 for every vertex v.
bool is_one_regular(const MultiGraph& g, const EdgeVector& x);

/// Two perfect matchings are skeleton-adjacent iff their symmetric
/// difference is exactly one cycle.
bool skeleton_adjacent(const MultiGraph& g, const PerfectMatching& m1,
                       const PerfectMatching& m2);

struct SkeletonGraph {
  std::vector<PerfectMatching> nodes;
  std::vector<std::vector<char>> adjacency;
  std::optional<int> diameter;  // nullopt would mean disconnected
};

SkeletonGraph build_skeleton(const MultiGraph& g,
                             std::size_t budget = kDefaultBudget);

/// Exact convex-hull membership: x is a convex combination of the
/// perfect matching incidence vectors. Solved as rational linear
/// feasibility over matching weights.
bool membership_in_polytope(const MultiGraph& g, const EdgeVector& x,
                            std::size_t budget = kDefaultBudget);

/// From an odd conformal bicycle: 1/2 on both cycles, 1 on the
/// complement matching, 0 elsewhere. Nonnegative and 1-regular but
/// outside the polytope.
EdgeVector bvn_counterexample_vector(const MultiGraph& g,
                                     const ConformalBicycle& b);

/// Exact feasibility of A*lambda = b, lambda >= 0 (phase-1 simplex with
/// Bland's rule).
bool exact_feasible(const std::vector<std::vector<Rational>>& a,
                    const std::vector<Rational>& b);

}  // namespace matchkit
