#ifndef DSN_GRAPH_HPP
#define DSN_GRAPH_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dsn/weight.hpp"

namespace dsn {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId tail;
  VertexId head;
  Weight weight;
};

// Directed weighted multigraph. Edge ids are dense 0..m-1 in insertion
// order and stay stable under every operation that does not add or remove
// edges. With `undirected` set the same container stores an undirected
// graph; each edge then means an unordered pair {tail, head}.
struct Graph {
  int n = 0;
  bool undirected = false;
  std::vector<Edge> edges;
  std::vector<std::string> labels;

  VertexId add_vertex(std::string label = std::string());
  EdgeId add_edge(VertexId tail, VertexId head, Weight w);

  int edge_count() const { return (int)edges.size(); }
  const std::string& label(VertexId v) const;

  // Out-adjacency as edge-id lists; for undirected graphs every edge
  // appears in both endpoint lists.
  std::vector<std::vector<EdgeId>> out_edges() const;
  std::vector<std::vector<EdgeId>> in_edges() const;
};

// Demand pattern: terminals plus ordered demand pairs over them. This is
// the directed graph whose edges are the (s, t) connectivity requirements.
struct Pattern {
  std::vector<VertexId> terminals;
  std::vector<std::pair<VertexId, VertexId>> demands;

  void normalize();
  void validate(int vertex_count) const;
  bool is_terminal(VertexId v) const;

  // All ordered pairs over R: the strongly-connect-R requirement.
  static Pattern all_pairs(const std::vector<VertexId>& terminals);
};

enum class Variant { DSN, SCSS };

struct SolutionClass {
  enum class Kind { Any, Planar, TreewidthAtMost, PolyTree, Cycle };
  Kind kind = Kind::Any;
  int omega = 0;

  static SolutionClass any() { return {Kind::Any, 0}; }
  static SolutionClass planar() { return {Kind::Planar, 0}; }
  static SolutionClass treewidth_at_most(int w) { return {Kind::TreewidthAtMost, w}; }
  static SolutionClass poly_tree() { return {Kind::PolyTree, 0}; }
  static SolutionClass cycle() { return {Kind::Cycle, 0}; }

  bool operator==(const SolutionClass& o) const {
    return kind == o.kind && omega == o.omega;
  }
};

struct Instance {
  Graph graph;
  Pattern pattern;
  Variant variant = Variant::DSN;
  bool bidirected_required = false;
  SolutionClass solution_class = SolutionClass::any();

  void validate() const;
};

// An edge subset of some instance graph with its derived cost and
// feasibility flag. edge_ids are kept sorted.
struct Solution {
  std::vector<EdgeId> edge_ids;
  Weight cost;
  bool feasible = false;
};

Weight edge_set_cost(const Graph& g, const std::vector<EdgeId>& ids);

// Builds a Solution with cost and feasibility filled in.
Solution make_solution(const Graph& g, std::vector<EdgeId> ids, const Pattern& p);

// True iff every edge (u,v,w) has a matching reverse (v,u,w); parallel
// edges are matched with multiplicity.
bool is_bidirected(const Graph& g);

// partner[e] = id of the reverse edge e is paired with, or -1. Pairing is
// deterministic: parallel candidates are matched in id order.
std::vector<EdgeId> bidirected_partner(const Graph& g);

struct UnderlyingGraph {
  Graph ug;                                  // undirected; tail < head per edge
  std::vector<std::array<EdgeId, 2>> origin; // directed ids per undirected edge; -1 if absent
  std::vector<EdgeId> directed_to_undirected;
};

// Collapses each bidirected pair {uv, vu} to one undirected edge and keeps
// one-directional edges as single undirected edges.
UnderlyingGraph underlying_undirected_with_map(const Graph& g);
Graph underlying_undirected(const Graph& g);

// Restriction of g to an edge subset, as adjacency lists (out per vertex).
std::vector<std::vector<EdgeId>> subset_out_edges(const Graph& g,
                                                  const std::vector<EdgeId>& ids);

}  // namespace dsn

#endif
