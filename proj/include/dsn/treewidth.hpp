#ifndef DSN_TREEWIDTH_HPP
#define DSN_TREEWIDTH_HPP

#include <vector>

#include "dsn/graph.hpp"

namespace dsn {

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int width = -1;
};

inline constexpr int kDefaultTreewidthCap = 24;

// Exact treewidth of an undirected graph (multi-edges and direction are
// ignored) via the elimination-ordering subset dynamic program. Throws
// CapacityError when the vertex count exceeds the cap.
int treewidth_exact(const Graph& ug, int vertex_cap = kDefaultTreewidthCap);

// Same computation, also recovering a witness decomposition whose width
// equals the treewidth.
TreeDecomposition treewidth_decomposition(const Graph& ug,
                                          int vertex_cap = kDefaultTreewidthCap);

// Checks the three tree-decomposition axioms against the graph.
bool valid_tree_decomposition(const Graph& ug, const TreeDecomposition& td);

}  // namespace dsn

#endif
