#ifndef DSN_APPROX_HPP
#define DSN_APPROX_HPP

#include <utility>
#include <vector>

#include "dsn/exact.hpp"
#include "dsn/graph.hpp"

namespace dsn {

// Primal-dual Steiner forest (moat growing with reverse delete); cost at
// most twice the optimal forest.
Solution steiner_forest_2approx(const Graph& ug,
                                const std::vector<std::pair<VertexId, VertexId>>& pairs);

// Bidirected DSN via an undirected Steiner forest, both directions of every
// forest edge, then minimality pruning. Factor 4 with the approximate
// forest, factor 2 with the exact one.
Solution bidsn_4approx(const Instance& inst);
Solution bidsn_2approx_fpt(const Instance& inst, int terminal_cap = kDefaultForestCap);

// SCSS: cheapest union of an out- and an in-arborescence over all candidate
// roots in R; cost at most twice the optimum.
Solution scss_2approx(const Graph& g, const std::vector<VertexId>& R,
                      int terminal_cap = kDefaultDreyfusCap);

}  // namespace dsn

#endif
