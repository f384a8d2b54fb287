#pragma once

#include <utility>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Odd wheel W_{2k+1}: rim vertices 0..2k in cyclic order, hub 2k+1.
/// Rim edges first (i, i+1 mod 2k+1), then spokes grouped by rim vertex.
/// Spoke multiplicities default to 1.
MultiGraph odd_wheel(int k, const std::vector<int>& spoke_mults = {});

/// The cubic splicing of K4 and K3,3: vertices a1=0, a2=1, b1=2, b2=3,
/// b3=4, t1=5, t2=6, t3=7; a-vertices joined to all b-vertices, t_i to
/// b_i, and t1 t2 t3 a triangle.
MultiGraph k4_splice_k33();

/// k4_splice_k33 plus 1 + extra parallel edges joining a1 and a2 (the
/// two noncubic vertices).
MultiGraph murty_graph(int extra_a1a2_mult = 0);

/// The PM-compact, non-Birkhoff-von-Neumann brick on 2k+6 vertices:
/// rim w_i = i (0..2k), u1 = 2k+1, u2 = 2k+2, v2 = 2k+3, u0 = 2k+4,
/// v0 = 2k+5. The split hub: v2-w0, v2-w4, u1-w2, u2 to every other rim
/// vertex; plus the pendant triangle edges u0u2, u0u1, u0v0, v0u1, v0v2.
MultiGraph p_brick(int k);

enum class NorineThomasTag {
  Prism,
  MoebiusLadder,
  TruncatedBiwheel,
  Staircase,
  Petersen,
  OddWheel,
};

/// The standard family member of the given order. Orders where the
/// member would not be a brick (bipartite prisms and ladders) are
/// rejected.
MultiGraph norine_thomas(NorineThomasTag tag, int order);

/// Splice across u in g1 and v in g2: delete both, join the far ends of
/// paired boundary edges. Vertices keep g1-then-g2 order; edges are g1's
/// non-seam edges, then g2's, then the seam edges by g1 edge id.
MultiGraph splice(const MultiGraph& g1, int u, const MultiGraph& g2, int v,
                  const std::vector<std::pair<int, int>>& pairing);

/// Every splicing across u and v, deduplicated up to isomorphism.
std::vector<MultiGraph> splice_all(const MultiGraph& g1, int u,
                                   const MultiGraph& g2, int v);

// Common fixtures.
MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);
MultiGraph cube_graph();
MultiGraph petersen_graph();

}  // namespace matchkit
