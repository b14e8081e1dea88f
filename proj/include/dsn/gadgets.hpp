#ifndef DSN_GADGETS_HPP
#define DSN_GADGETS_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dsn/graph.hpp"

namespace dsn {

// Row-structured bidirected gadget: two sources s1/s2, two targets t1/t2,
// and per row a four-vertex chain 0-1-2-3 whose outer vertices 0 and 3
// form the boundary. Base edges run along each chain; connectors join
// s1 and t1 to every 1-vertex and s2 and t2 to every 2-vertex. Every edge
// has weight M, so n rows give 4n+4 vertices and 2*(3n+4n) directed edges.
struct UniquenessGadget {
  int n = 0;
  Weight M;
  VertexId s1 = -1;
  VertexId s2 = -1;
  VertexId t1 = -1;
  VertexId t2 = -1;
  std::vector<std::array<VertexId, 4>> rows;  // rows[i] = chain of row i+1
  std::vector<EdgeId> edge_ids;               // the gadget's edges, ascending
};

struct GadgetBuild {
  Graph graph;
  UniquenessGadget gadget;
};

// Builds a standalone gadget with n rows (n >= 1) and edge weight M > 0.
GadgetBuild gen_uniqueness_gadget(int n, const Weight& M);

enum class Orientation { left, right };

// Verdict on an edge set within a gadget: whether both sources reach the
// boundary and both targets are reached from it, the set's total weight,
// and, when the set is exactly one oriented row path of weight 7M, which
// row and orientation it walks.
struct InOutReport {
  bool satisfies = false;
  Weight weight;
  std::optional<std::pair<int, Orientation>> representation;
};

InOutReport check_inout(const Graph& g, const UniquenessGadget& u,
                        const std::vector<EdgeId>& ids);

// The weight-7M set that routes s1/s2 through row `row` (1-based) to
// t1/t2: the four connector edges of the row directed source-in and
// target-out, plus the base path walked rightwards (0 to 3) or leftwards.
std::vector<EdgeId> representation_edges(const Graph& g, const UniquenessGadget& u,
                                         int row, Orientation o);

// k x k table of allowed value pairs from [n] x [n]. A selection picks one
// pair per cell so that all cells of a table row agree on the first value
// and all cells of a table column agree on the second.
struct GridTilingInput {
  int k = 0;
  int n = 0;
  // cells[i][j] lists the allowed pairs of cell (i+1, j+1), values 1-based.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cells;
};

// Partitioned subgraph search: pick one host vertex from each class
// V_1..V_l so that whenever classes i and j are adjacent in the class
// graph h, the picked vertices are adjacent in the host graph g.
struct CSIInput {
  Graph g;                                     // undirected host graph
  Graph h;                                     // undirected class graph on l vertices
  std::vector<std::vector<VertexId>> classes;  // V_1..V_l as vertex ids of g
};

// Same data read as an optimization problem: pick one vertex per class to
// realize as many class-graph edges as possible.
using MCSIInput = CSIInput;

// A generated instance with its certified YES-case budget and, when the
// generator can exhibit one, the canonical witness of exactly that cost.
struct ReductionOutput {
  Instance instance;
  Weight budget;
  std::optional<Solution> witness;
};

// Encodes a grid tiling table as a bidirected instance whose intended
// optimum is planar. Each cell becomes a gadget whose rows are the cell's
// pairs, each seam between neighbouring cells becomes a gadget with rows
// [n], weight-1 edges stitch matching rows together, border vertices close
// off the outermost seams, and every seam gadget contributes four demand
// pairs. budget = 4k + 2k(k+1)B + k^2(B+4) with B = 7M; M defaults to k^4.
// When some selection solves the table, the cheapest such network is
// emitted as the witness; it costs exactly the budget.
ReductionOutput gen_gridtiling_bidsnplanar(const GridTilingInput& gt,
                                           std::optional<Weight> M = std::nullopt);

// Same layout over an l x l gadget grid driven by a class graph: a cell
// survives only for adjacent class pairs and for the diagonal, skipped
// cells merge the seam gadgets around them, cell rows are the host graph's
// cross-class edges (diagonal cells: one row per class vertex), and seam
// gadget rows are the class members. budget = 4l + 2(2k+2l)B + (2k+l)(B+4)
// with B = 7M and k class-graph edges. A valid class assignment, when one
// exists, yields the witness of exactly the budget.
ReductionOutput gen_csi_bidsn(const CSIInput& csi, const Weight& M);

// Complete bidirected instance over the vertices of ug (n >= 3) in which
// all vertices are terminals to be strongly connected: arcs copying ug
// edges cost 1, all other arcs cost 2. The optimum is n exactly when ug
// has a Hamiltonian cycle, so budget = n; no witness is emitted.
ReductionOutput gen_hamcycle_biscss(const Graph& ug);

// Directed strong-connection instance over class anchors b_i, per-vertex
// lanes c_v -> c'_v, per-edge lanes d -> d', and ordered-pair anchors
// f_{i,j}; the terminals are the anchors. Only the lane entries cost
// anything: 2q/l per c-lane and 1/binom(l,2) per d-lane. Requires a
// complete class graph on l >= 2 classes and q > 0. A one-vertex-per-class
// clique in the host graph yields the witness of cost 2(1+q) = budget.
ReductionOutput gen_mcsi_scss(const MCSIInput& mcsi, const Weight& q);

// Source/sink instance threading two copies of the host graph between l
// sources and l sinks: source and sink edges cost 1/(2l), copy-to-copy
// edges derived from host edges are free, and the demands are all ordered
// source/sink pairs (l^2 - l of them). Requires a complete class graph on
// l >= 2 classes. A one-vertex-per-class clique yields the witness of
// cost exactly 1 = budget.
ReductionOutput gen_mcsi_dsn(const MCSIInput& mcsi);

}  // namespace dsn

#endif
