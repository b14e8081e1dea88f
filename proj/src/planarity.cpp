#include "dsn/planarity.hpp"

#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace dsn {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

// Builds a simple boost graph; keep[i] is the dsn edge id behind boost edge
// index i (parallel duplicates and self-loops dropped).
BoostGraph to_boost_simple(const Graph& ug, std::vector<EdgeId>& keep) {
  BoostGraph bg(ug.n);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < ug.edge_count(); ++e) {
    VertexId a = ug.edges[e].tail, b = ug.edges[e].head;
    if (a == b) continue;
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) continue;
    boost::add_edge(a, b, (int)keep.size(), bg);
    keep.push_back(e);
  }
  return bg;
}

}  // namespace

bool is_planar(const Graph& ug) {
  if (ug.n <= 4) return true;
  std::vector<EdgeId> keep;
  BoostGraph bg = to_boost_simple(ug, keep);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<std::vector<std::vector<EdgeId>>> planar_rotation(const Graph& ug) {
  std::vector<EdgeId> keep;
  BoostGraph bg = to_boost_simple(ug, keep);
  if (keep.size() != (size_t)ug.edge_count()) return std::nullopt;  // parallels dropped

  using Embedding = std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
  Embedding embedding(boost::num_vertices(bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(),
                                            boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;

  auto index_map = boost::get(boost::edge_index, bg);
  std::vector<std::vector<EdgeId>> rotation(ug.n);
  for (int v = 0; v < ug.n; ++v)
    for (auto& ed : embedding[v]) rotation[v].push_back(keep[index_map[ed]]);
  return rotation;
}

}  // namespace dsn
