#include "dsn/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "dsn/errors.hpp"
#include "dsn/reach.hpp"

namespace dsn {

VertexId Graph::add_vertex(std::string label) {
  labels.push_back(std::move(label));
  return n++;
}

EdgeId Graph::add_edge(VertexId tail, VertexId head, Weight w) {
  if (tail < 0 || tail >= n || head < 0 || head >= n)
    throw ContractError("edge endpoint out of range");
  if (tail == head) throw ContractError("self-loops are not supported");
  if (w.is_negative()) throw ContractError("negative edge weight");
  edges.push_back(Edge{tail, head, w});
  return (EdgeId)edges.size() - 1;
}

const std::string& Graph::label(VertexId v) const {
  static const std::string empty;
  if (v < 0 || v >= (int)labels.size()) return empty;
  return labels[v];
}

std::vector<std::vector<EdgeId>> Graph::out_edges() const {
  std::vector<std::vector<EdgeId>> adj(n);
  for (EdgeId e = 0; e < (EdgeId)edges.size(); ++e) {
    adj[edges[e].tail].push_back(e);
    if (undirected) adj[edges[e].head].push_back(e);
  }
  return adj;
}

std::vector<std::vector<EdgeId>> Graph::in_edges() const {
  std::vector<std::vector<EdgeId>> adj(n);
  for (EdgeId e = 0; e < (EdgeId)edges.size(); ++e) {
    adj[edges[e].head].push_back(e);
    if (undirected) adj[edges[e].tail].push_back(e);
  }
  return adj;
}

void Pattern::normalize() {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  std::sort(demands.begin(), demands.end());
  demands.erase(std::unique(demands.begin(), demands.end()), demands.end());
}

void Pattern::validate(int vertex_count) const {
  for (VertexId t : terminals)
    if (t < 0 || t >= vertex_count) throw ContractError("terminal out of range");
  for (auto& [s, t] : demands) {
    if (s == t) throw ContractError("demand with equal endpoints");
    if (!is_terminal(s) || !is_terminal(t))
      throw ContractError("demand endpoint is not a terminal");
  }
}

bool Pattern::is_terminal(VertexId v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

Pattern Pattern::all_pairs(const std::vector<VertexId>& terminals) {
  Pattern p;
  p.terminals = terminals;
  std::sort(p.terminals.begin(), p.terminals.end());
  p.terminals.erase(std::unique(p.terminals.begin(), p.terminals.end()),
                    p.terminals.end());
  for (VertexId s : p.terminals)
    for (VertexId t : p.terminals)
      if (s != t) p.demands.emplace_back(s, t);
  return p;
}

void Instance::validate() const {
  pattern.validate(graph.n);
  if (bidirected_required && !is_bidirected(graph))
    throw ContractError("instance declared bidirected but graph is not");
  if (variant == Variant::SCSS) {
    Pattern full = Pattern::all_pairs(pattern.terminals);
    if (pattern.demands != full.demands)
      throw ContractError("scss pattern must be all ordered pairs over the terminals");
  }
}

Weight edge_set_cost(const Graph& g, const std::vector<EdgeId>& ids) {
  Weight total;
  for (EdgeId e : ids) {
    if (e < 0 || e >= g.edge_count()) throw ContractError("edge id out of range");
    total += g.edges[e].weight;
  }
  return total;
}

Solution make_solution(const Graph& g, std::vector<EdgeId> ids, const Pattern& p) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Solution s;
  s.cost = edge_set_cost(g, ids);
  s.feasible = check_feasible(g, ids, p);
  s.edge_ids = std::move(ids);
  return s;
}

bool is_bidirected(const Graph& g) {
  std::map<std::tuple<VertexId, VertexId, long long, long long>, int> balance;
  for (const Edge& e : g.edges) {
    if (e.tail < e.head)
      balance[{e.tail, e.head, e.weight.num(), e.weight.den()}]++;
    else
      balance[{e.head, e.tail, e.weight.num(), e.weight.den()}]--;
  }
  for (auto& [key, count] : balance)
    if (count != 0) return false;
  return true;
}

std::vector<EdgeId> bidirected_partner(const Graph& g) {
  std::map<std::tuple<VertexId, VertexId, long long, long long>,
           std::pair<std::vector<EdgeId>, std::vector<EdgeId>>>
      groups;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges[e];
    auto key = std::make_tuple(std::min(ed.tail, ed.head), std::max(ed.tail, ed.head),
                               ed.weight.num(), ed.weight.den());
    if (ed.tail < ed.head)
      groups[key].first.push_back(e);
    else
      groups[key].second.push_back(e);
  }
  std::vector<EdgeId> partner(g.edge_count(), -1);
  for (auto& [key, pair] : groups) {
    size_t matched = std::min(pair.first.size(), pair.second.size());
    for (size_t i = 0; i < matched; ++i) {
      partner[pair.first[i]] = pair.second[i];
      partner[pair.second[i]] = pair.first[i];
    }
  }
  return partner;
}

UnderlyingGraph underlying_undirected_with_map(const Graph& g) {
  std::vector<EdgeId> partner = bidirected_partner(g);
  UnderlyingGraph u;
  u.ug.n = g.n;
  u.ug.undirected = true;
  u.ug.labels = g.labels;
  u.directed_to_undirected.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (partner[e] != -1 && partner[e] < e) continue;  // handled with its partner
    const Edge& ed = g.edges[e];
    VertexId a = std::min(ed.tail, ed.head), b = std::max(ed.tail, ed.head);
    u.ug.edges.push_back(Edge{a, b, ed.weight});
    EdgeId ue = (EdgeId)u.ug.edges.size() - 1;
    std::array<EdgeId, 2> orig = {e, partner[e]};
    u.origin.push_back(orig);
    u.directed_to_undirected[e] = ue;
    if (partner[e] != -1) u.directed_to_undirected[partner[e]] = ue;
  }
  return u;
}

Graph underlying_undirected(const Graph& g) {
  return underlying_undirected_with_map(g).ug;
}

std::vector<std::vector<EdgeId>> subset_out_edges(const Graph& g,
                                                  const std::vector<EdgeId>& ids) {
  std::vector<std::vector<EdgeId>> adj(g.n);
  for (EdgeId e : ids) {
    adj[g.edges[e].tail].push_back(e);
    if (g.undirected) adj[g.edges[e].head].push_back(e);
  }
  return adj;
}

}  // namespace dsn
