#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchkit/bits.hpp"
#include "matchkit/error.hpp"

namespace matchkit {

struct Edge {
  int u;
  int v;
};

/// Loopless undirected multigraph. Edge ids are dense (0..m-1) in
/// construction order; parallel edges are distinct ids with equal
/// endpoint pairs. Immutable after construction.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Incident (neighbour, edge id) pairs in ascending edge-id order.
  const std::vector<std::pair<int, int>>& incident(int v) const {
    return adj_[v];
  }

  /// Number of incident edges, counting multiplicities.
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<int> distinct_neighbours(int v) const;
  int distinct_neighbour_count(int v) const;
  int multiplicity(int u, int v) const;

  bool is_connected() const;
  bool is_bipartite() const;
  bool is_simple() const;

  /// Endpoint of `edge_id` that is not `v`.
  int other_end(int edge_id, int v) const {
    const Edge& e = edges_[edge_id];
    return e.u == v ? e.v : e.u;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Cut of a vertex subset: the shore, its complement, and the boundary
/// edges between them.
struct Cut {
  std::vector<int> shore;
  std::vector<int> co_shore;
  std::vector<int> boundary;
  bool trivial = false;
};

/// A cycle as a cyclic vertex sequence plus the traversed edge ids.
/// Edge ids disambiguate parallel edges; a 2-cycle is a pair of
/// distinct parallel edges.
struct CycleSeq {
  std::vector<int> vertices;
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(vertices.size()); }
  bool odd() const { return length() % 2 == 1; }
};

struct IsoWitness {
  std::vector<int> mapping;  // vertex of g -> vertex of h
};

MultiGraph build_graph(int n, const std::vector<std::pair<int, int>>& endpoint_pairs);

MultiGraph underlying_simple(const MultiGraph& g);

Cut cut_of(const MultiGraph& g, const std::vector<int>& shore);

/// Parity filter for cycle and bicycle searches.
enum class ParityWant { Odd, Even, Any };

/// Visits cycles in a fixed deterministic order (see enumerate_cycles).
/// The visitor returns false to stop early. Returns false if stopped.
bool visit_cycles(const MultiGraph& g, ParityWant parity,
                  const std::function<bool(const CycleSeq&)>& visit);

/// All cycles of the requested parity, deterministically ordered:
/// grouped by minimum cycle vertex ascending, 2-cycles of a start
/// vertex first, then DFS order with the canonical orientation
/// (second vertex smaller than last). Raises BudgetExhausted if more
/// than `budget` cycles would be emitted.
std::vector<CycleSeq> enumerate_cycles(const MultiGraph& g, ParityWant parity,
                                       std::size_t budget = kDefaultBudget);

std::optional<IsoWitness> are_isomorphic(const MultiGraph& g, const MultiGraph& h);

/// True iff `w` maps g onto h preserving adjacency multiplicities.
bool verify_iso_witness(const MultiGraph& g, const MultiGraph& h, const IsoWitness& w);

// --- plumbing shared across modules ---

/// Copy of g with vertices renamed by `perm` (vertex v becomes perm[v]).
MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm);

/// Copy of g with one edge id removed; remaining ids are re-packed
/// densely in order and reported through `old_ids` when requested.
MultiGraph remove_edge(const MultiGraph& g, int edge_id,
                       std::vector<int>* old_ids = nullptr);

/// Copy of g with an extra u-v edge appended (id m).
MultiGraph add_edge(const MultiGraph& g, int u, int v);

/// Induced subgraph on the vertices where keep[v] is true. `vertex_map`
/// gets old->new indices (-1 for dropped), `old_edge_ids` the
/// originating edge id per new edge.
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<char>& keep,
                            std::vector<int>* vertex_map = nullptr,
                            std::vector<int>* old_edge_ids = nullptr);

Bits vertex_mask(const MultiGraph& g, const std::vector<int>& vertices);

/// Canonical encoding of a cycle's vertex sequence: rotated to start at
/// the minimum vertex, oriented so the second vertex is smaller than
/// the last. Used for deterministic tie-breaking.
std::vector<int> canonical_cycle_key(const CycleSeq& c);

/// True iff the sequence is a genuine cycle of g (distinct vertices,
/// consecutive edges with the listed endpoints, distinct edge ids).
bool is_valid_cycle(const MultiGraph& g, const CycleSeq& c);

// --- graph file format ---
//
//   c <comment>          (ignored)
//   p mcg <n> <m>
//   e <u> <v>            (1-based, exactly m lines; repeats = parallel)

MultiGraph parse_mcg(std::istream& in);
MultiGraph parse_mcg_string(const std::string& text);
std::string format_mcg(const MultiGraph& g, const std::string& comment = "");

}  // namespace matchkit
