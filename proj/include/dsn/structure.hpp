#ifndef DSN_STRUCTURE_HPP
#define DSN_STRUCTURE_HPP

#include <vector>

#include "dsn/graph.hpp"

namespace dsn {

enum class TransformKind { SplitTerminal, SplitSteiner, ContractDegree2, TieBreak };

struct TransformOp {
  TransformKind kind;
  std::vector<int> old_ids;
  std::vector<int> new_ids;
};

// Record of a degree-reduction run. edge_origin[e] lists the input edge ids
// whose weights sum to edge e of the transformed graph (zero-weight helper
// edges have an empty list); map_back uses it to pull any solution of the
// transformed graph back to one of equal cost in the input graph.
struct TransformTrace {
  std::vector<TransformOp> ops;
  std::vector<std::vector<EdgeId>> edge_origin;
  int original_vertex_count = 0;
  int original_edge_count = 0;
};

struct ReducedGraph {
  Graph graph;
  TransformTrace trace;
};

// Transforms a bidirected graph so that every terminal with at least one
// edge has exactly one neighbour (a Steiner splitter) and every Steiner
// vertex that keeps edges has exactly three neighbours. Planar inputs are
// split along a planar rotation so planarity is preserved.
ReducedGraph reduce_degrees(const Graph& g, const std::vector<VertexId>& terminals);

// Pulls a solution of the reduced graph back to the original graph.
std::vector<EdgeId> map_back(const TransformTrace& trace,
                             const std::vector<EdgeId>& reduced_edges);

// Deterministic strict total order on edges substituting for weight
// perturbation: rank[e] < rank[f] means e precedes f. Compares by (weight,
// min endpoint, max endpoint, reverse-pair unit, id), so a reverse pair is
// adjacent in the order.
std::vector<int> tie_break_rank(const Graph& g);

// Replaces a poly-cycle of N (given as an edge sequence around the cycle)
// by a directed cycle on the same vertices. The orientation keeping more of
// the existing edges wins; remaining ties go to tie_break_rank. Reachability
// of every ordered vertex pair is preserved and the cost never increases.
Solution replace_polycycle(const Graph& g, const Solution& n,
                           const std::vector<EdgeId>& cycle, const Pattern& p);

// Repeatedly rewires poly-cycles inside 2-connected underlying components
// until each such component is strongly connected, making the condensation
// a poly-forest. Cost never increases; reachable pairs are preserved.
Solution canonicalize_components(const Graph& g, const Solution& n, const Pattern& p);

// Greedy minimality: removes edges in descending tie-break order while the
// solution stays feasible. The result loses feasibility on the removal of
// any single edge.
Solution prune_minimal(const Graph& g, const Solution& n, const Pattern& p);

}  // namespace dsn

#endif
