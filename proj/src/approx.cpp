#include "dsn/approx.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "dsn/errors.hpp"

namespace dsn {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(b)] = find(a); }
};

bool pairs_connected(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs,
                     const Graph& ug, const std::vector<EdgeId>& ids) {
  DisjointSets ds(n);
  for (EdgeId id : ids) ds.unite((int)ug.edges[id].tail, (int)ug.edges[id].head);
  for (const auto& [a, b] : pairs)
    if (ds.find((int)a) != ds.find((int)b)) return false;
  return true;
}

Pattern pattern_of(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  Pattern p;
  p.demands = pairs;
  p.normalize();
  return p;
}

// Doubles an undirected Steiner forest into both arc directions. The doubled
// set serves every directed demand, and keeping it unpruned preserves the
// guarantee that the exact-forest variant never costs more than the
// approximate one.
Solution bidirect(const Instance& inst, const UnderlyingGraph& und,
                  const Solution& forest) {
  if (!forest.feasible) return Solution{};
  std::vector<EdgeId> ids;
  for (EdgeId ue : forest.edge_ids)
    for (EdgeId d : und.origin[ue])
      if (d >= 0) ids.push_back(d);
  return make_solution(inst.graph, std::move(ids), inst.pattern);
}

std::vector<std::pair<VertexId, VertexId>> undirected_demands(const Instance& inst) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& d : inst.pattern.demands) {
    VertexId a = std::min(d.first, d.second);
    VertexId b = std::max(d.first, d.second);
    if (a == b) continue;
    if (seen.insert({a, b}).second) pairs.emplace_back(a, b);
  }
  return pairs;
}

void require_bidirected(const Instance& inst, const char* who) {
  if (!is_bidirected(inst.graph))
    throw ContractError(std::string(who) + " expects a bidirected graph");
}

}  // namespace

Solution steiner_forest_2approx(const Graph& ug,
                                const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  const int n = (int)ug.n;
  for (const auto& [a, b] : pairs)
    if (a >= ug.n || b >= ug.n)
      throw ContractError("demand endpoint out of range");

  std::vector<EdgeId> all(ug.edges.size());
  std::iota(all.begin(), all.end(), 0);
  if (!pairs_connected(n, pairs, ug, all)) return Solution{};

  // Primal-dual moat growing: every active component raises its dual at unit
  // rate; an edge is bought the moment its moats cover its weight.
  DisjointSets ds(n);
  std::vector<Weight> slack;
  slack.reserve(ug.edges.size());
  for (const auto& e : ug.edges) slack.push_back(e.weight);
  std::vector<EdgeId> bought;

  std::vector<char> active(n, 0);
  auto any_active = [&]() {
    std::fill(active.begin(), active.end(), 0);
    bool any = false;
    for (const auto& [a, b] : pairs) {
      int ca = ds.find((int)a);
      int cb = ds.find((int)b);
      if (ca != cb) {
        active[ca] = active[cb] = 1;
        any = true;
      }
    }
    return any;
  };

  while (any_active()) {
    // Pick the edge that goes tight first; ties resolve to the lowest id.
    EdgeId best_edge = -1;
    Weight best_delta;
    for (std::size_t e = 0; e < ug.edges.size(); ++e) {
      int ca = ds.find((int)ug.edges[e].tail);
      int cb = ds.find((int)ug.edges[e].head);
      if (ca == cb) continue;
      int rate = (int)active[ca] + (int)active[cb];
      if (rate == 0) continue;
      Weight delta = slack[e] / Weight(rate);
      if (best_edge < 0 || delta < best_delta) {
        best_delta = delta;
        best_edge = (EdgeId)e;
      }
    }
    if (best_edge < 0) break;
    for (std::size_t e = 0; e < ug.edges.size(); ++e) {
      int ca = ds.find((int)ug.edges[e].tail);
      int cb = ds.find((int)ug.edges[e].head);
      if (ca == cb) continue;
      int rate = (int)active[ca] + (int)active[cb];
      if (rate > 0) slack[e] -= best_delta * Weight(rate);
    }
    bought.push_back(best_edge);
    ds.unite((int)ug.edges[best_edge].tail, (int)ug.edges[best_edge].head);
  }

  // Reverse delete: drop late purchases whose removal keeps every pair joined.
  std::vector<char> keep(bought.size(), 1);
  for (int i = (int)bought.size() - 1; i >= 0; --i) {
    keep[i] = 0;
    std::vector<EdgeId> rest;
    for (std::size_t j = 0; j < bought.size(); ++j)
      if (keep[j]) rest.push_back(bought[j]);
    if (!pairs_connected(n, pairs, ug, rest)) keep[i] = 1;
  }
  std::vector<EdgeId> ids;
  for (std::size_t j = 0; j < bought.size(); ++j)
    if (keep[j]) ids.push_back(bought[j]);
  return make_solution(ug, std::move(ids), pattern_of(pairs));
}

Solution bidsn_4approx(const Instance& inst) {
  require_bidirected(inst, "bidsn_4approx");
  UnderlyingGraph und = underlying_undirected_with_map(inst.graph);
  Solution forest = steiner_forest_2approx(und.ug, undirected_demands(inst));
  return bidirect(inst, und, forest);
}

Solution bidsn_2approx_fpt(const Instance& inst, int terminal_cap) {
  require_bidirected(inst, "bidsn_2approx_fpt");
  UnderlyingGraph und = underlying_undirected_with_map(inst.graph);
  Solution forest = steiner_forest_fpt(und.ug, undirected_demands(inst), terminal_cap);
  return bidirect(inst, und, forest);
}

Solution scss_2approx(const Graph& g, const std::vector<VertexId>& R, int terminal_cap) {
  std::vector<VertexId> roots(R);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (VertexId v : roots)
    if (v >= g.n) throw ContractError("terminal out of range");

  Pattern strong;
  for (VertexId a : roots)
    for (VertexId b : roots)
      if (a != b) strong.demands.emplace_back(a, b);
  strong.normalize();
  if (roots.size() <= 1) return make_solution(g, {}, strong);

  Graph rev;
  rev.n = g.n;
  rev.undirected = g.undirected;
  for (const auto& e : g.edges) rev.add_edge(e.head, e.tail, e.weight);

  // An out-arborescence reaches every terminal from the root; the matching
  // in-arborescence on the reversed graph brings them all back. Each costs at
  // most a full optimum, so the cheapest union over roots is a 2-approximation.
  bool found = false;
  Solution best;
  for (VertexId r : roots) {
    Solution out = dreyfus_wagner_dst(g, r, roots, terminal_cap);
    if (!out.feasible) continue;
    Solution in = dreyfus_wagner_dst(rev, r, roots, terminal_cap);
    if (!in.feasible) continue;
    std::vector<EdgeId> ids(out.edge_ids);
    ids.insert(ids.end(), in.edge_ids.begin(), in.edge_ids.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Solution cand = make_solution(g, std::move(ids), strong);
    if (!found || cand.cost < best.cost) {
      found = true;
      best = std::move(cand);
    }
  }
  if (!found) return Solution{};
  return best;
}

}  // namespace dsn
