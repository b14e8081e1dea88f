#ifndef DSN_PLANARITY_HPP
#define DSN_PLANARITY_HPP

#include <optional>
#include <vector>

#include "dsn/graph.hpp"

namespace dsn {

// Planarity of an undirected graph (parallel edges ignored; they never
// change the answer).
bool is_planar(const Graph& ug);

// A planar rotation system: for each vertex the cyclic order of incident
// undirected edge ids in one planar embedding. Empty result when the graph
// is not planar or has parallel edges.
std::optional<std::vector<std::vector<EdgeId>>> planar_rotation(const Graph& ug);

}  // namespace dsn

#endif
