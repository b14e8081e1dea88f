#ifndef DSN_REACH_HPP
#define DSN_REACH_HPP

#include <vector>

#include "dsn/graph.hpp"

namespace dsn {

// Vertices reachable from `from` using only the given edge ids.
std::vector<char> reachable_from(const Graph& g, const std::vector<EdgeId>& ids,
                                 VertexId from);

// True iff the edge subset contains an s->t path for every demand.
bool check_feasible(const Graph& g, const std::vector<EdgeId>& ids, const Pattern& p);

struct Condensation {
  std::vector<int> comp;  // vertex -> component id, components in reverse
                          // topological order of the DAG reversed to
                          // topological order (comp 0 has no incoming edges
                          // from later components)
  Graph dag;              // one vertex per component, deduplicated edges
};

// Strongly connected components of the subgraph given by the edge ids
// (all vertices of g participate; isolated vertices form singletons).
Condensation scc_condensation(const Graph& g, const std::vector<EdgeId>& ids);
Condensation scc_condensation(const Graph& g);

// Connected components of the undirected view of the edge subset.
std::vector<int> weak_components(const Graph& g, const std::vector<EdgeId>& ids);

struct BiconnectedSplit {
  std::vector<std::vector<EdgeId>> components;  // edge ids per biconnected component
  std::vector<char> is_articulation;            // indexed by vertex
};

// Biconnected components of an undirected graph restricted to the given
// edges. Bridges form their own single-edge components.
BiconnectedSplit biconnected_components(const Graph& ug, const std::vector<EdgeId>& ids);

}  // namespace dsn

#endif
