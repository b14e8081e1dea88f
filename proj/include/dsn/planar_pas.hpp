#ifndef DSN_PLANAR_PAS_HPP
#define DSN_PLANAR_PAS_HPP

#include <map>
#include <vector>

#include "dsn/exact.hpp"
#include "dsn/graph.hpp"

namespace dsn {

// Upper bound on the cost of all terminal-reaching paths relative to the
// network cost, and on how many paths may share one edge.
inline constexpr int kPathCostFactor = 18;

// Floor and ceiling for the region-size parameter derived from epsilon.
inline constexpr int kMinRegionSize = 8;
inline constexpr int kMaxRegionSize = 1 << 16;

// How many patterns bidsn_planar_pas may enumerate before giving up.
inline constexpr long long kDefaultPatternEnumCap = 5000;

// Partition of a network's edges into regions of bounded vertex span.
// offsets records the chop offset chosen for each of the h-1 rounds.
struct RDivision {
  std::vector<std::vector<EdgeId>> edge_partition;
  std::vector<VertexId> boundary_vertices;
  int r = 0;
  std::vector<int> offsets;
};

struct DecompositionPart {
  Pattern pattern;
  Solution subnetwork;
};

// A cover of the demand pattern by small sub-patterns, each with a network
// serving it; the union of the subnetworks serves the original pattern.
struct Decomposition {
  std::vector<DecompositionPart> parts;
  Weight epsilon;
};

struct DecompositionReport {
  bool feasible = false;
  Weight cost_ratio;
  int max_part_terminals = 0;
};

// Optimum planar solution on a bidirected graph. Searches treewidth-bounded
// edge sets (width grows with the square root of the demand count) under a
// planarity filter.
Solution bidsn_planar_xp(const Instance& inst, const OracleBudget& budget = {},
                         int vertex_cap = kDefaultVertexCap);

// Approximation scheme: enumerates small patterns over the terminal set,
// solves each with the planar XP solver, and returns the cheapest feasible
// union of the per-pattern optima. Exact whenever the pattern-size bound
// derived from epsilon reaches the full terminal count.
Solution bidsn_planar_pas(const Instance& inst, const Weight& epsilon,
                          const OracleBudget& budget = {},
                          long long pattern_cap = kDefaultPatternEnumCap,
                          int vertex_cap = kDefaultVertexCap);

// For every Steiner vertex of N, a directed path to some terminal, built
// from in-/out-arborescences of each strongly connected closure. The total
// path cost stays within kPathCostFactor times the network cost.
std::map<VertexId, std::vector<EdgeId>> terminal_paths(const Graph& gN,
                                                       const Solution& N,
                                                       const std::vector<VertexId>& R);

// Weighted r-division by iterated breadth-first chops: each region spans at
// most r vertices and the boundary carries at most a (3h/tau) fraction of
// the total vertex weight. Requires maximum degree 3.
RDivision tau_chop_division(const Graph& N, const std::vector<Weight>& vertex_weights,
                            int r, int h);

// Splits an optimum planar solution into region subnetworks augmented with
// boundary terminal paths, and derives the pattern each part serves.
Decomposition build_decomposition(const Instance& inst, const Solution& N,
                                  const Weight& epsilon);

// Checks union feasibility, the summed-cost blowup over cost(N), and the
// largest per-part terminal count.
DecompositionReport verify_decomposition(const Instance& inst, const Solution& N,
                                         const Decomposition& d);

}  // namespace dsn

#endif
