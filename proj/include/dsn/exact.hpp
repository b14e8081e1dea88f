#ifndef DSN_EXACT_HPP
#define DSN_EXACT_HPP

#include <functional>
#include <utility>
#include <vector>

#include "dsn/graph.hpp"

namespace dsn {

inline constexpr int kDefaultDreyfusCap = 14;
inline constexpr int kDefaultForestCap = 10;
inline constexpr int kDefaultVertexCap = 24;

// Limits for the subset-search solvers. max_edges_enumerated counts search
// nodes; exceeding either limit raises CapacityError.
struct OracleBudget {
  long long max_edges_enumerated = 4000000;
  long long time_cap_ms = 60000;
};

// Does the edge subset satisfy the structural solution class? Feasibility
// for a pattern is a separate concern (check_feasible).
bool solution_in_class(const Graph& g, const std::vector<EdgeId>& ids,
                       const SolutionClass& cls,
                       const std::vector<VertexId>& terminals);

// Ground-truth solver: branch and bound over edge subsets in tie-break
// order, with admissible lower bounds from residual shortest paths and
// monotone class pruning. Returns feasible=false when no network exists.
Solution brute_force_dsn(const Instance& inst, const OracleBudget& budget = {});

// Minimum Steiner tree connecting R in an undirected graph, by the subset
// dynamic program over terminal sets.
Solution dreyfus_wagner_st(const Graph& ug, const std::vector<VertexId>& R,
                           int terminal_cap = kDefaultDreyfusCap);

// Directed Steiner tree: cheapest subgraph with a root->t path for every
// t in R.
Solution dreyfus_wagner_dst(const Graph& g, VertexId root, const std::vector<VertexId>& R,
                            int terminal_cap = kDefaultDreyfusCap);

// Optimal Steiner forest: enumerates partitions of the demand-induced
// terminal groups and solves each part as a Steiner tree.
Solution steiner_forest_fpt(const Graph& ug,
                            const std::vector<std::pair<VertexId, VertexId>>& pairs,
                            int terminal_cap = kDefaultForestCap);

// Extra admissible filter for dsn_bounded_tw: must be monotone (once an
// edge set is rejected, every superset is rejected too).
using EdgeFilter = std::function<bool(const Graph&, const std::vector<EdgeId>&)>;

// Cheapest solution whose underlying graph has treewidth at most omega
// (solution_class TreewidthAtMost or PolyTree). Best-first search over edge
// subsets; the omega = 1 case degenerates to the poly-tree class.
Solution dsn_bounded_tw(const Instance& inst, const OracleBudget& budget = {},
                        const EdgeFilter& monotone_filter = {},
                        int vertex_cap = kDefaultVertexCap);

}  // namespace dsn

#endif
