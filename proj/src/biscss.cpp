#include "dsn/biscss.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "dsn/errors.hpp"
#include "dsn/reach.hpp"

namespace dsn {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<VertexId> checked_terminals(const Graph& g, const std::vector<VertexId>& R) {
  std::vector<VertexId> roots(R.begin(), R.end());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (VertexId r : roots)
    if (r < 0 || r >= g.n) throw ContractError("terminal out of range");
  return roots;
}

}  // namespace

Solution biscss_fpt(const Graph& g, const std::vector<VertexId>& R,
                    const OracleBudget& budget, int full_enumeration_cap) {
  if (!is_bidirected(g))
    throw ContractError("biscss_fpt expects a bidirected graph");
  if (full_enumeration_cap < 1)
    throw ContractError("full enumeration cap must be positive");
  std::vector<VertexId> roots = checked_terminals(g, R);
  Pattern want = Pattern::all_pairs(roots);
  if (roots.size() <= 1) return make_solution(g, {}, want);

  std::vector<EdgeId> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  for (VertexId r : roots) {
    std::vector<char> reach = reachable_from(g, all, r);
    for (VertexId t : roots)
      if (!reach[t]) return Solution{};
  }

  if ((int)roots.size() > full_enumeration_cap) {
    Instance inst;
    inst.graph = g;
    inst.pattern = want;
    inst.variant = Variant::SCSS;
    inst.bidirected_required = true;
    return brute_force_dsn(inst, budget);
  }

  // Solve every demand sub-pattern over the ordered terminal pairs at the
  // poly-tree class. Three kinds of pattern are skipped outright, none of
  // which can change the final optimum: patterns whose demand digraph
  // splits into weakly connected halves (the halves are enumerated on
  // their own and the union search below reassembles them), cyclic ones
  // (reachability inside a poly-forest is a partial order), and ones that
  // are not transitively closed (a network serving a pattern serves its
  // closure too, so both have the same optimum and the closure is already
  // enumerated).
  const std::vector<std::pair<VertexId, VertexId>>& pairs = want.demands;
  std::map<VertexId, int> rix;
  for (std::size_t i = 0; i < roots.size(); ++i) rix[roots[i]] = (int)i;

  struct Part {
    Weight cost;
    std::vector<EdgeId> edge_ids;
  };
  std::vector<Part> parts;
  std::set<std::vector<EdgeId>> seen;
  Instance sub;
  sub.graph = g;
  sub.solution_class = SolutionClass::poly_tree();
  for (unsigned long long mask = 1; mask < (1ull << pairs.size()); ++mask) {
    DisjointSets uf((int)roots.size());
    std::set<VertexId> touched;
    std::vector<std::pair<VertexId, VertexId>> demands;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) {
        demands.push_back(pairs[i]);
        touched.insert(pairs[i].first);
        touched.insert(pairs[i].second);
        uf.merge(rix[pairs[i].first], rix[pairs[i].second]);
      }
    std::set<int> reps;
    for (VertexId v : touched) reps.insert(uf.find(rix[v]));
    if (reps.size() > 1) continue;

    int k = (int)roots.size();
    std::vector<char> rel(k * k, 0);
    for (auto& [s, t] : demands) rel[rix[s] * k + rix[t]] = 1;
    std::vector<char> clo = rel;
    for (int mid = 0; mid < k; ++mid)
      for (int a = 0; a < k; ++a)
        if (clo[a * k + mid])
          for (int b = 0; b < k; ++b)
            if (clo[mid * k + b]) clo[a * k + b] = 1;
    bool skip = false;
    for (int a = 0; a < k * k && !skip; ++a)
      if (clo[a] != rel[a]) skip = true;
    for (int a = 0; a < k && !skip; ++a)
      if (clo[a * k + a]) skip = true;
    if (skip) continue;

    sub.pattern.terminals.assign(touched.begin(), touched.end());
    sub.pattern.demands = std::move(demands);
    sub.pattern.normalize();
    Solution s = dsn_bounded_tw(sub, budget);
    if (!s.feasible) continue;
    if (seen.insert(s.edge_ids).second) parts.push_back({s.cost, s.edge_ids});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.cost < b.cost; });

  // Cheapest union of per-pattern optima that strongly connects the
  // terminals, branch and bound in cost order.
  Solution best;
  std::vector<EdgeId> chosen;
  auto search = [&](auto&& self, std::size_t idx) -> void {
    Weight cost = edge_set_cost(g, chosen);
    if (best.feasible && !(cost < best.cost)) return;
    if (check_feasible(g, chosen, want)) {
      best = make_solution(g, chosen, want);
      return;
    }
    if (idx == parts.size()) return;
    std::vector<EdgeId> saved = chosen;
    std::vector<EdgeId> merged = chosen;
    merged.insert(merged.end(), parts[idx].edge_ids.begin(), parts[idx].edge_ids.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    chosen = std::move(merged);
    self(self, idx + 1);
    chosen = std::move(saved);
    self(self, idx + 1);
  };
  search(search, 0);
  return best;
}

namespace {

// One unordered endpoint pair of the network with the arc ids it carries;
// fwd runs from the lower endpoint to the higher one.
struct Unit {
  VertexId u = -1, v = -1;
  EdgeId fwd = -1, bwd = -1;
};

std::vector<Unit> group_units(const Graph& g, const std::vector<EdgeId>& arcs) {
  std::map<std::tuple<VertexId, VertexId, long long, long long>,
           std::pair<std::vector<EdgeId>, std::vector<EdgeId>>>
      grouped;
  for (EdgeId e : arcs) {
    const Edge& ed = g.edges[e];
    auto key = std::make_tuple(std::min(ed.tail, ed.head), std::max(ed.tail, ed.head),
                               ed.weight.num(), ed.weight.den());
    (ed.tail < ed.head ? grouped[key].first : grouped[key].second).push_back(e);
  }
  std::vector<Unit> units;
  for (auto& [key, slot] : grouped) {
    VertexId u = std::get<0>(key), v = std::get<1>(key);
    std::size_t both = std::min(slot.first.size(), slot.second.size());
    for (std::size_t i = 0; i < both; ++i)
      units.push_back({u, v, slot.first[i], slot.second[i]});
    for (std::size_t i = both; i < slot.first.size(); ++i)
      units.push_back({u, v, slot.first[i], -1});
    for (std::size_t i = both; i < slot.second.size(); ++i)
      units.push_back({u, v, -1, slot.second[i]});
  }
  return units;
}

}  // namespace

std::vector<PolyTreePart> polytree_decompose(const Graph& g, const Solution& N,
                                             const std::vector<VertexId>& R) {
  if (!is_bidirected(g))
    throw ContractError("polytree_decompose expects a bidirected graph");
  std::vector<VertexId> roots = checked_terminals(g, R);
  std::vector<EdgeId> arcs = N.edge_ids;
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (EdgeId e : arcs) {
    if (e < 0 || e >= g.edge_count()) throw ContractError("edge id out of range");
    if (g.edges[e].tail == g.edges[e].head)
      throw ContractError("network contains a self-loop");
  }
  if (arcs.empty()) {
    if (roots.size() <= 1) return {};
    throw ContractError("network misses a terminal");
  }

  std::vector<char> touched(g.n, 0);
  for (EdgeId e : arcs) {
    touched[g.edges[e].tail] = 1;
    touched[g.edges[e].head] = 1;
  }
  for (VertexId r : roots)
    if (!touched[r]) throw ContractError("network misses a terminal");

  Condensation cond = scc_condensation(g, arcs);
  int comp0 = -1;
  for (VertexId v = 0; v < g.n; ++v) {
    if (!touched[v]) continue;
    if (comp0 == -1) comp0 = cond.comp[v];
    if (cond.comp[v] != comp0)
      throw ContractError("network is not strongly connected");
  }

  std::vector<Unit> units = group_units(g, arcs);
  Graph unit_graph;
  unit_graph.n = g.n;
  unit_graph.undirected = true;
  for (const Unit& un : units) unit_graph.add_edge(un.u, un.v, Weight(1));
  std::vector<EdgeId> uids(unit_graph.edge_count());
  std::iota(uids.begin(), uids.end(), 0);
  BiconnectedSplit split = biconnected_components(unit_graph, uids);

  std::vector<char> is_term(g.n, 0);
  for (VertexId r : roots) is_term[r] = 1;
  std::vector<std::vector<int>> incident(g.n);
  for (std::size_t i = 0; i < units.size(); ++i) {
    incident[units[i].u].push_back((int)i);
    incident[units[i].v].push_back((int)i);
  }
  for (VertexId v = 0; v < g.n; ++v) {
    if (!touched[v] || is_term[v]) continue;
    std::set<VertexId> nb;
    for (int ui : incident[v]) nb.insert(units[ui].u == v ? units[ui].v : units[ui].u);
    if (nb.size() > 3)
      throw ContractError("steiner vertex has more than three neighbours");
  }

  // Cut vertices and terminals delimit the pieces; everything between them
  // stays whole.
  std::vector<char> in_w(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    in_w[v] = split.is_articulation[v] || is_term[v];

  std::vector<std::vector<EdgeId>> part_arcs;
  std::vector<int> arc_part(g.edge_count(), -1);
  auto add_part = [&](std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    for (EdgeId e : ids) arc_part[e] = (int)part_arcs.size();
    part_arcs.push_back(std::move(ids));
  };

  std::vector<int> unit_comp(units.size(), -1);
  for (std::size_t c = 0; c < split.components.size(); ++c)
    for (EdgeId uid : split.components[c]) unit_comp[uid] = (int)c;

  // Two-connected pieces split into classes: a lone edge between two
  // delimiters, or all edges hanging off one connected stretch of
  // non-delimiter vertices. Each class must span a tree.
  for (const auto& comp : split.components) {
    if (comp.size() <= 1) continue;
    for (EdgeId uid : comp)
      if (units[uid].fwd != -1 && units[uid].bwd != -1)
        throw ContractError("reverse pair inside a two-connected component");
    DisjointSets uf((int)comp.size());
    std::map<EdgeId, int> local;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = (int)i;
    std::map<VertexId, std::vector<int>> at;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      at[units[comp[i]].u].push_back((int)i);
      at[units[comp[i]].v].push_back((int)i);
    }
    for (auto& [v, lst] : at)
      if (!in_w[v])
        for (std::size_t j = 1; j < lst.size(); ++j) uf.merge(lst[0], lst[j]);
    std::map<int, std::vector<EdgeId>> classes;
    for (std::size_t i = 0; i < comp.size(); ++i)
      classes[uf.find((int)i)].push_back(comp[i]);
    for (auto& [root, uid_list] : classes) {
      std::set<VertexId> span;
      std::vector<EdgeId> ids;
      for (EdgeId uid : uid_list) {
        span.insert(units[uid].u);
        span.insert(units[uid].v);
        ids.push_back(units[uid].fwd != -1 ? units[uid].fwd : units[uid].bwd);
      }
      if (uid_list.size() != span.size() - 1)
        throw ContractError("a cycle avoids the terminals and cut vertices");
      add_part(std::move(ids));
    }
  }

  // Bridges form trees; each tree contributes an outward and an inward
  // arborescence rooted at its lowest-numbered leaf.
  std::vector<int> bridge_uids;
  for (const auto& comp : split.components)
    if (comp.size() == 1) bridge_uids.push_back(comp[0]);
  for (int uid : bridge_uids)
    if (units[uid].fwd == -1 || units[uid].bwd == -1)
      throw std::logic_error("bridge of a strongly connected network lost a direction");
  {
    DisjointSets uf((int)bridge_uids.size());
    std::map<VertexId, std::vector<int>> at;
    for (std::size_t i = 0; i < bridge_uids.size(); ++i) {
      at[units[bridge_uids[i]].u].push_back((int)i);
      at[units[bridge_uids[i]].v].push_back((int)i);
    }
    for (auto& [v, lst] : at)
      for (std::size_t j = 1; j < lst.size(); ++j) uf.merge(lst[0], lst[j]);
    std::map<int, std::vector<int>> trees;
    for (std::size_t i = 0; i < bridge_uids.size(); ++i)
      trees[uf.find((int)i)].push_back((int)i);
    for (auto& [root, members] : trees) {
      std::map<VertexId, std::vector<std::pair<VertexId, int>>> adj;
      for (int li : members) {
        const Unit& un = units[bridge_uids[li]];
        adj[un.u].push_back({un.v, bridge_uids[li]});
        adj[un.v].push_back({un.u, bridge_uids[li]});
      }
      VertexId tree_root = -1;
      for (auto& [v, nbors] : adj)
        if (nbors.size() == 1) {
          if (!is_term[v] && incident[v].size() == 1)
            throw ContractError("network has a steiner leaf");
          if (tree_root == -1) tree_root = v;
        }
      if (tree_root == -1)
        throw std::logic_error("bridge edges formed a cycle");
      std::vector<EdgeId> out_arcs, in_arcs;
      std::set<VertexId> seen_v = {tree_root};
      std::vector<VertexId> frontier = {tree_root};
      while (!frontier.empty()) {
        std::vector<VertexId> next;
        for (VertexId p : frontier)
          for (auto& [c, uid] : adj[p]) {
            if (seen_v.count(c)) continue;
            seen_v.insert(c);
            const Unit& un = units[uid];
            out_arcs.push_back(p == un.u ? un.fwd : un.bwd);
            in_arcs.push_back(p == un.u ? un.bwd : un.fwd);
            next.push_back(c);
          }
        frontier = std::move(next);
      }
      add_part(std::move(out_arcs));
      add_part(std::move(in_arcs));
    }
  }

  // A non-terminal cut vertex between one two-connected piece and one
  // bridge joins its pieces pairwise so that no maximal directed path stops
  // there: the class entering it continues into the arborescence leaving
  // it, and the arborescence entering it continues into the class leaving.
  DisjointSets glue((int)part_arcs.size());
  for (VertexId w = 0; w < g.n; ++w) {
    if (!touched[w] || is_term[w] || !split.is_articulation[w]) continue;
    std::vector<int> comp_units, bridge_units;
    for (int ui : incident[w])
      (split.components[unit_comp[ui]].size() > 1 ? comp_units : bridge_units)
          .push_back(ui);
    if (comp_units.size() != 2 || bridge_units.size() != 1) continue;
    int t_head = -1, t_tail = -1;
    for (int ui : comp_units) {
      EdgeId arc = units[ui].fwd != -1 ? units[ui].fwd : units[ui].bwd;
      (g.edges[arc].head == w ? t_head : t_tail) = arc_part[arc];
    }
    if (t_head == -1 || t_tail == -1)
      throw std::logic_error("cut vertex of a strongly connected network lost a direction");
    const Unit& bu = units[bridge_units[0]];
    EdgeId arc_out = bu.u == w ? bu.fwd : bu.bwd;
    EdgeId arc_in = bu.u == w ? bu.bwd : bu.fwd;
    glue.merge(t_head, arc_part[arc_out]);
    glue.merge(t_tail, arc_part[arc_in]);
  }

  std::map<int, std::vector<EdgeId>> merged;
  for (std::size_t p = 0; p < part_arcs.size(); ++p) {
    auto& into = merged[glue.find((int)p)];
    into.insert(into.end(), part_arcs[p].begin(), part_arcs[p].end());
  }
  std::vector<std::vector<EdgeId>> finals;
  for (auto& [root, ids] : merged) {
    std::sort(ids.begin(), ids.end());
    finals.push_back(std::move(ids));
  }
  std::sort(finals.begin(), finals.end(),
            [](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
              return a.front() < b.front();
            });

  std::vector<PolyTreePart> out;
  for (auto& ids : finals) {
    std::set<VertexId> span;
    for (EdgeId e : ids) {
      span.insert(g.edges[e].tail);
      span.insert(g.edges[e].head);
    }
    Pattern p;
    for (VertexId r : roots)
      if (span.count(r)) p.terminals.push_back(r);
    for (VertexId s : p.terminals) {
      std::vector<char> reach = reachable_from(g, ids, s);
      for (VertexId t : p.terminals)
        if (s != t && reach[t]) p.demands.emplace_back(s, t);
    }
    p.normalize();
    if (!solution_in_class(g, ids, SolutionClass::poly_tree(), p.terminals))
      throw std::logic_error("decomposition produced a part that is not a poly-tree");
    std::vector<int> wc = weak_components(g, ids);
    int wc0 = wc[g.edges[ids.front()].tail];
    for (EdgeId e : ids)
      if (wc[g.edges[e].tail] != wc0 || wc[g.edges[e].head] != wc0)
        throw std::logic_error("decomposition produced a disconnected part");
    Solution tree = make_solution(g, std::move(ids), p);
    out.push_back({std::move(p), std::move(tree)});
  }
  return out;
}

}  // namespace dsn
