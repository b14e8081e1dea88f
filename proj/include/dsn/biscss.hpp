#ifndef DSN_BISCSS_HPP
#define DSN_BISCSS_HPP

#include <vector>

#include "dsn/exact.hpp"
#include "dsn/graph.hpp"

namespace dsn {

// Largest terminal count handled by full pattern enumeration; above it
// biscss_fpt switches to the direct cost-bounded search.
inline constexpr int kBiscssEnumerationCap = 4;

// One poly-tree of a decomposed network together with the sub-pattern it
// serves: demand (s, t) is present iff the tree has an s->t path.
struct PolyTreePart {
  Pattern pattern;
  Solution tree;
};

// Optimum network strongly connecting R in a bidirected graph. Enumerates
// demand patterns over the ordered terminal pairs, solves each one at the
// poly-tree class, and returns the cheapest union of per-pattern optima
// that strongly connects R; feasible=false when no network can.
Solution biscss_fpt(const Graph& g, const std::vector<VertexId>& R,
                    const OracleBudget& budget = {},
                    int full_enumeration_cap = kBiscssEnumerationCap);

// Splits an optimum network strongly connecting R into edge-disjoint
// poly-trees whose maximal directed paths lead from terminal to terminal.
// Networks not of that shape raise ContractError.
std::vector<PolyTreePart> polytree_decompose(const Graph& g, const Solution& N,
                                             const std::vector<VertexId>& R);

}  // namespace dsn

#endif
