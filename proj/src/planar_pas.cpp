#include "dsn/planar_pas.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "dsn/errors.hpp"
#include "dsn/planarity.hpp"
#include "dsn/reach.hpp"

namespace dsn {

namespace {

Graph edge_subgraph(const Graph& g, const std::vector<EdgeId>& ids) {
  Graph sub;
  sub.n = g.n;
  sub.undirected = g.undirected;
  for (EdgeId id : ids) {
    const auto& e = g.edges[id];
    sub.add_edge(e.tail, e.head, e.weight);
  }
  return sub;
}

// Pairs every edge with its reverse of equal weight; parallel copies are
// matched in id order.
std::vector<EdgeId> bidirected_partners(const Graph& g, const char* who) {
  std::map<std::tuple<VertexId, VertexId, long long, long long>,
           std::pair<std::vector<EdgeId>, std::vector<EdgeId>>>
      groups;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    VertexId a = std::min(e.tail, e.head), b = std::max(e.tail, e.head);
    auto& slot = groups[{a, b, e.weight.num(), e.weight.den()}];
    (e.tail == a ? slot.first : slot.second).push_back((EdgeId)i);
  }
  std::vector<EdgeId> partner(g.edges.size(), -1);
  for (auto& [key, slot] : groups) {
    if (slot.first.size() != slot.second.size())
      throw ContractError(std::string(who) + " expects a bidirected graph");
    for (std::size_t i = 0; i < slot.first.size(); ++i) {
      partner[slot.first[i]] = slot.second[i];
      partner[slot.second[i]] = slot.first[i];
    }
  }
  return partner;
}

std::vector<std::vector<VertexId>> distinct_neighbours(const Graph& g,
                                                       const std::vector<EdgeId>& ids) {
  std::vector<std::set<VertexId>> nb(g.n);
  for (EdgeId id : ids) {
    const auto& e = g.edges[id];
    if (e.tail == e.head) continue;
    nb[e.tail].insert(e.head);
    nb[e.head].insert(e.tail);
  }
  std::vector<std::vector<VertexId>> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v].assign(nb[v].begin(), nb[v].end());
  return out;
}

}  // namespace

Solution bidsn_planar_xp(const Instance& inst, const OracleBudget& budget,
                         int vertex_cap) {
  if (!is_bidirected(inst.graph))
    throw ContractError("bidsn_planar_xp expects a bidirected graph");
  auto kind = inst.solution_class.kind;
  if (kind != SolutionClass::Kind::Any && kind != SolutionClass::Kind::Planar)
    throw ContractError("bidsn_planar_xp expects the planar solution class");

  int k = (int)inst.pattern.demands.size();
  int omega = std::max(1, (int)std::ceil(6.0 * std::sqrt((double)k)));
  Instance bounded = inst;
  bounded.solution_class = SolutionClass::treewidth_at_most(omega);
  EdgeFilter planar_only = [](const Graph& g, const std::vector<EdgeId>& ids) {
    return is_planar(edge_subgraph(g, ids));
  };
  return dsn_bounded_tw(bounded, budget, planar_only, vertex_cap);
}

Solution bidsn_planar_pas(const Instance& inst, const Weight& epsilon,
                          const OracleBudget& budget, long long pattern_cap,
                          int vertex_cap) {
  if (!is_bidirected(inst.graph))
    throw ContractError("bidsn_planar_pas expects a bidirected graph");
  if (!(Weight(0) < epsilon)) throw ContractError("epsilon must be positive");
  if (pattern_cap <= 0) throw ContractError("pattern cap must be positive");

  if (inst.pattern.demands.empty())
    return make_solution(inst.graph, {}, inst.pattern);

  // Pattern-size bound 2^ceil(1/eps), hard-capped at 8 terminals.
  long long inv = (epsilon.den() + epsilon.num() - 1) / epsilon.num();
  int gbound = inv >= 3 ? 8 : (1 << std::max<long long>(1, inv));

  const std::vector<VertexId>& R = inst.pattern.terminals;
  std::vector<EdgeId> all(inst.graph.edges.size());
  std::iota(all.begin(), all.end(), 0);

  std::vector<std::pair<VertexId, VertexId>> realizable;
  for (VertexId s : R) {
    auto reach = reachable_from(inst.graph, all, s);
    for (VertexId t : R)
      if (s != t && reach[t]) realizable.emplace_back(s, t);
  }
  std::sort(realizable.begin(), realizable.end());
  for (const auto& d : inst.pattern.demands)
    if (!std::binary_search(realizable.begin(), realizable.end(), d))
      return Solution{};

  if ((int)realizable.size() > 20)
    throw CapacityError("pattern enumeration exceeds the cap");

  struct Part {
    Weight cost;
    std::vector<EdgeId> edge_ids;
  };
  std::vector<Part> parts;
  long long enumerated = 0;
  for (unsigned long long mask = 1; mask < (1ull << realizable.size()); ++mask) {
    std::set<VertexId> touched;
    std::vector<std::pair<VertexId, VertexId>> demands;
    for (std::size_t i = 0; i < realizable.size(); ++i)
      if (mask >> i & 1) {
        demands.push_back(realizable[i]);
        touched.insert(realizable[i].first);
        touched.insert(realizable[i].second);
      }
    if ((int)touched.size() > gbound) continue;
    if (++enumerated > pattern_cap)
      throw CapacityError("pattern enumeration exceeds the cap");
    Instance sub;
    sub.graph = inst.graph;
    sub.pattern.terminals.assign(touched.begin(), touched.end());
    sub.pattern.demands = std::move(demands);
    sub.pattern.normalize();
    sub.solution_class = SolutionClass::planar();
    Solution s = bidsn_planar_xp(sub, budget, vertex_cap);
    if (s.feasible) parts.push_back({s.cost, s.edge_ids});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.cost < b.cost; });

  // Cheapest feasible union of per-pattern optima, branch and bound in cost
  // order; once a union serves every demand, extending it only adds cost.
  Solution best;
  std::vector<EdgeId> chosen;
  auto search = [&](auto&& self, std::size_t idx) -> void {
    Weight cost = edge_set_cost(inst.graph, chosen);
    if (best.feasible && !(cost < best.cost)) return;
    if (check_feasible(inst.graph, chosen, inst.pattern)) {
      best = make_solution(inst.graph, chosen, inst.pattern);
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

std::map<VertexId, std::vector<EdgeId>> terminal_paths(const Graph& gN,
                                                       const Solution& N,
                                                       const std::vector<VertexId>& R) {
  std::vector<EdgeId> partner = bidirected_partners(gN, "terminal_paths");
  for (EdgeId id : N.edge_ids)
    if (id < 0 || id >= (int)gN.edges.size())
      throw ContractError("edge id out of range");
  std::vector<char> is_term(gN.n, 0);
  for (VertexId v : R) {
    if (v < 0 || v >= gN.n) throw ContractError("terminal out of range");
    is_term[v] = 1;
  }

  auto nb = distinct_neighbours(gN, N.edge_ids);
  std::vector<char> touched(gN.n, 0);
  for (EdgeId id : N.edge_ids) {
    touched[gN.edges[id].tail] = 1;
    touched[gN.edges[id].head] = 1;
  }
  for (int v = 0; v < gN.n; ++v) {
    if (!touched[v]) continue;
    if (is_term[v] && nb[v].size() != 1)
      throw ContractError("terminal has more than one neighbour");
    if (!is_term[v] && nb[v].size() > 3)
      throw ContractError("steiner vertex has more than three neighbours");
  }

  Condensation cond = scc_condensation(gN, N.edge_ids);
  {
    std::vector<int> parent(cond.dag.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : cond.dag.edges) {
      int a = find(e.tail), b = find(e.head);
      if (a == b) throw ContractError("condensation is not a poly-forest");
      parent[a] = b;
    }
  }

  std::vector<int> wc = weak_components(gN, N.edge_ids);
  std::map<int, std::vector<EdgeId>> comp_edges;
  for (EdgeId id : N.edge_ids) comp_edges[wc[gN.edges[id].tail]].push_back(id);

  std::map<VertexId, std::vector<EdgeId>> paths;
  for (auto& [comp, cids] : comp_edges) {
    // Strongly connected closure: add the reverse of every edge that
    // crosses strongly connected components.
    std::set<EdgeId> closure(cids.begin(), cids.end());
    for (EdgeId id : cids) {
      const auto& e = gN.edges[id];
      if (cond.comp[e.tail] != cond.comp[e.head]) closure.insert(partner[id]);
    }
    std::vector<EdgeId> cl(closure.begin(), closure.end());

    std::set<VertexId> vert_set;
    for (EdgeId id : cl) {
      vert_set.insert(gN.edges[id].tail);
      vert_set.insert(gN.edges[id].head);
    }
    std::vector<VertexId> verts(vert_set.begin(), vert_set.end());
    std::vector<VertexId> terms;
    for (VertexId v : verts)
      if (is_term[v]) terms.push_back(v);
    if (terms.empty()) throw ContractError("component contains no terminal");
    VertexId root = terms[0];

    std::map<VertexId, std::vector<EdgeId>> out_adj, in_adj;
    for (EdgeId id : cl) {
      out_adj[gN.edges[id].tail].push_back(id);
      in_adj[gN.edges[id].head].push_back(id);
    }
    for (auto& [v, lst] : out_adj)
      std::sort(lst.begin(), lst.end(), [&](EdgeId a, EdgeId b) {
        return std::tie(gN.edges[a].head, a) < std::tie(gN.edges[b].head, b);
      });
    for (auto& [v, lst] : in_adj)
      std::sort(lst.begin(), lst.end(), [&](EdgeId a, EdgeId b) {
        return std::tie(gN.edges[a].tail, a) < std::tie(gN.edges[b].tail, b);
      });

    // tree[v]: the closure edge leading v toward the root side, for the
    // out-tree (edge into v) and the in-tree (edge out of v).
    auto grow_tree = [&](bool outward) {
      std::map<VertexId, EdgeId> tree;
      std::map<VertexId, std::vector<VertexId>> children;
      std::queue<VertexId> q;
      std::set<VertexId> seen = {root};
      q.push(root);
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId id : outward ? out_adj[v] : in_adj[v]) {
          VertexId u = outward ? gN.edges[id].head : gN.edges[id].tail;
          if (!seen.insert(u).second) continue;
          tree[u] = id;
          children[v].push_back(u);
          q.push(u);
        }
      }
      if ((int)seen.size() != (int)verts.size())
        throw ContractError("closure is not strongly connected");
      return std::make_pair(tree, children);
    };
    auto [out_tree, out_children] = grow_tree(true);
    auto [in_tree, in_children] = grow_tree(false);

    // Trim Steiner leaves so every remaining leaf is a terminal.
    auto trim = [&](std::map<VertexId, std::vector<VertexId>>& children,
                    std::map<VertexId, EdgeId>& tree) {
      bool again = true;
      while (again) {
        again = false;
        for (auto v : verts) {
          if (is_term[v] || !tree.count(v) || !children[v].empty()) continue;
          VertexId p = gN.edges[tree[v]].tail == v ? gN.edges[tree[v]].head
                                                   : gN.edges[tree[v]].tail;
          auto& sib = children[p];
          sib.erase(std::find(sib.begin(), sib.end(), v));
          tree.erase(v);
          again = true;
        }
      }
    };
    trim(out_children, out_tree);
    trim(in_children, in_tree);

    std::set<VertexId> branching;
    for (auto& [v, ch] : out_children)
      if (ch.size() >= 2) branching.insert(v);
    for (auto& [v, ch] : in_children)
      if (ch.size() >= 2) branching.insert(v);

    // Edge-disjoint branch-to-leaf paths: each branching point consumes the
    // descent through its first child and hands the second child's descent
    // to the ancestors.
    auto tree_paths = [&](const std::map<VertexId, std::vector<VertexId>>& children,
                          const std::map<VertexId, EdgeId>& tree, bool outward,
                          std::map<VertexId, std::vector<EdgeId>>& assigned) {
      auto step = [&](VertexId child) {
        EdgeId id = tree.at(child);
        // Walking away from the root traverses in-tree edges backwards.
        return outward ? id : partner[id];
      };
      auto descend = [&](auto&& self, VertexId v) -> std::vector<EdgeId> {
        auto it = children.find(v);
        if (it == children.end() || it->second.empty()) return {};
        std::vector<std::vector<EdgeId>> down;
        for (VertexId c : it->second) {
          std::vector<EdgeId> path = {step(c)};
          auto below = self(self, c);
          path.insert(path.end(), below.begin(), below.end());
          down.push_back(std::move(path));
        }
        if (down.size() < 2) return down[0];
        if (!assigned.count(v)) assigned[v] = down[0];
        return down[1];
      };
      descend(descend, root);
    };
    std::map<VertexId, std::vector<EdgeId>> assigned;
    tree_paths(out_children, out_tree, true, assigned);
    std::map<VertexId, std::vector<EdgeId>> assigned_in;
    tree_paths(in_children, in_tree, false, assigned_in);
    for (auto& [v, p] : assigned_in)
      if (!assigned.count(v)) assigned[v] = p;

    for (auto& [v, p] : assigned)
      if (!is_term[v]) paths[v] = p;

    // Closure adjacency and a directed edge for every undirected step.
    auto cl_nb = distinct_neighbours(gN, cl);
    std::map<std::pair<VertexId, VertexId>, EdgeId> arc;
    for (EdgeId id : cl) {
      const auto& e = gN.edges[id];
      auto key = std::make_pair(e.tail, e.head);
      if (!arc.count(key)) arc[key] = id;
      auto rkey = std::make_pair(e.head, e.tail);
      if (!arc.count(rkey)) arc[rkey] = partner[id];
    }

    auto walk_to_path = [&](VertexId start, const std::vector<EdgeId>& walk) {
      std::vector<VertexId> stack_v = {start};
      std::vector<EdgeId> stack_e;
      for (EdgeId id : walk) {
        VertexId y = gN.edges[id].head;
        auto it = std::find(stack_v.begin(), stack_v.end(), y);
        if (it != stack_v.end()) {
          std::size_t keep = (std::size_t)(it - stack_v.begin());
          stack_v.resize(keep + 1);
          stack_e.resize(keep);
        } else {
          stack_v.push_back(y);
          stack_e.push_back(id);
        }
      }
      return stack_e;
    };

    // Remaining Steiner vertices walk to the nearest anchor (terminal or
    // branching point) and borrow its path; for fully contracted networks
    // the anchor sits within two hops.
    for (VertexId v : verts) {
      if (is_term[v] || paths.count(v)) continue;
      std::map<VertexId, VertexId> parent;
      std::vector<VertexId> layer = {v};
      parent[v] = v;
      VertexId target = -1;
      while (target < 0 && !layer.empty()) {
        std::vector<VertexId> next;
        for (VertexId x : layer)
          for (VertexId u : cl_nb[x])
            if (!parent.count(u)) {
              parent[u] = x;
              next.push_back(u);
            }
        std::sort(next.begin(), next.end());
        for (VertexId u : next)
          if (is_term[u] || branching.count(u)) {
            target = u;
            break;
          }
        layer = std::move(next);
      }
      if (target < 0)
        throw ContractError("no terminal or branching point near a steiner vertex");
      std::vector<VertexId> hops = {target};
      while (hops.back() != v) hops.push_back(parent[hops.back()]);
      std::reverse(hops.begin(), hops.end());
      std::vector<EdgeId> walk;
      for (std::size_t i = 0; i + 1 < hops.size(); ++i)
        walk.push_back(arc.at({hops[i], hops[i + 1]}));
      if (!is_term[target]) {
        const auto& ext = assigned.at(target);
        walk.insert(walk.end(), ext.begin(), ext.end());
      }
      paths[v] = walk_to_path(v, walk);
    }
  }

  Weight total(0);
  for (const auto& [v, p] : paths)
    for (EdgeId id : p) total += gN.edges[id].weight;
  Weight budget = Weight(kPathCostFactor) * edge_set_cost(gN, N.edge_ids);
  if (budget < total)
    throw std::logic_error("terminal path cost exceeds the configured factor");
  return paths;
}

RDivision tau_chop_division(const Graph& N, const std::vector<Weight>& vertex_weights,
                            int r, int h) {
  if (r < 2) throw ContractError("region size must be at least 2");
  if (h < 2) throw ContractError("chop depth must be at least 2");
  if ((int)vertex_weights.size() != N.n)
    throw ContractError("vertex weight count mismatch");
  auto nb = distinct_neighbours(N, [&] {
    std::vector<EdgeId> all(N.edges.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  for (int v = 0; v < N.n; ++v)
    if ((int)nb[v].size() > 3) throw ContractError("vertex degree exceeds three");

  RDivision div;
  div.r = r;
  if (N.edges.empty()) {
    if (N.n > 0) div.edge_partition.push_back({});
    return div;
  }

  Weight total(0);
  for (int v = 0; v < N.n; ++v) total += vertex_weights[v];

  // Hop-band refinement of one part: BFS layers from the lowest vertex of
  // each connected piece, first band thinner by the offset. Parts already
  // small enough stay whole.
  auto chop_part = [&](const std::vector<VertexId>& part, int tau, int tau0) {
    std::vector<std::vector<VertexId>> bands;
    if ((int)part.size() <= r) {
      bands.push_back(part);
      return bands;
    }
    std::set<VertexId> left(part.begin(), part.end());
    while (!left.empty()) {
      VertexId v0 = *left.begin();
      std::map<VertexId, int> dist;
      std::queue<VertexId> q;
      dist[v0] = 0;
      q.push(v0);
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId u : nb[v])
          if (left.count(u) && !dist.count(u)) {
            dist[u] = dist[v] + 1;
            q.push(u);
          }
      }
      std::map<int, std::vector<VertexId>> by_band;
      for (auto [v, d] : dist) {
        left.erase(v);
        int band = d < tau0 ? 0 : 1 + (d - tau0) / tau;
        by_band[band].push_back(v);
      }
      for (auto& [band, vs] : by_band) bands.push_back(vs);
    }
    return bands;
  };

  int tau_init = std::max(1, (int)std::ceil(std::log2((double)r)));
  for (int tau = tau_init; tau >= 1; --tau) {
    bool have_best = false;
    int best_tau0 = 0;
    Weight best_weight;
    std::vector<std::vector<EdgeId>> best_regions;
    std::vector<VertexId> best_boundary;
    for (int tau0 = 1; tau0 <= tau; ++tau0) {
      std::vector<VertexId> everything;
      for (int v = 0; v < N.n; ++v)
        if (!nb[v].empty()) everything.push_back(v);
      std::vector<std::vector<VertexId>> parts = {everything};
      for (int round = 0; round < h - 1; ++round) {
        std::vector<std::vector<VertexId>> next;
        for (const auto& part : parts)
          for (auto& band : chop_part(part, tau, tau0)) next.push_back(band);
        parts = std::move(next);
      }
      std::vector<int> part_of(N.n, -1);
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (VertexId v : parts[i]) part_of[v] = (int)i;
      std::map<int, std::vector<EdgeId>> by_part;
      for (std::size_t id = 0; id < N.edges.size(); ++id) {
        const auto& e = N.edges[id];
        by_part[part_of[std::min(e.tail, e.head)]].push_back((EdgeId)id);
      }
      bool valid = true;
      std::vector<std::vector<EdgeId>> regions;
      std::vector<int> incidence(N.n, 0);
      for (auto& [part, ids] : by_part) {
        std::set<VertexId> span;
        for (EdgeId id : ids) {
          span.insert(N.edges[id].tail);
          span.insert(N.edges[id].head);
        }
        if ((int)span.size() > r) {
          valid = false;
          break;
        }
        for (VertexId v : span) ++incidence[v];
        regions.push_back(ids);
      }
      if (!valid) continue;
      std::vector<VertexId> boundary;
      Weight bw(0);
      for (int v = 0; v < N.n; ++v)
        if (incidence[v] >= 2) {
          boundary.push_back(v);
          bw += vertex_weights[v];
        }
      if (!have_best || bw < best_weight) {
        have_best = true;
        best_tau0 = tau0;
        best_weight = bw;
        best_regions = std::move(regions);
        best_boundary = std::move(boundary);
      }
    }
    if (have_best && best_weight * Weight(tau) <= Weight(3 * h) * total) {
      div.edge_partition = std::move(best_regions);
      div.boundary_vertices = std::move(best_boundary);
      div.offsets.assign(h - 1, best_tau0);
      return div;
    }
  }
  throw ContractError("region size bound unattainable");
}

Decomposition build_decomposition(const Instance& inst, const Solution& N,
                                  const Weight& epsilon) {
  if (!(Weight(0) < epsilon)) throw ContractError("epsilon must be positive");
  if (!N.feasible) throw ContractError("decomposition requires a feasible network");

  auto paths = terminal_paths(inst.graph, N, inst.pattern.terminals);
  std::vector<EdgeId> partner = bidirected_partners(inst.graph, "build_decomposition");

  long long inv = (epsilon.den() + epsilon.num() - 1) / epsilon.num();
  long long raw = inv >= 20 ? (long long)kMaxRegionSize : (1ll << inv);
  int r = (int)std::clamp<long long>(raw, kMinRegionSize, kMaxRegionSize);

  std::vector<Weight> costs(inst.graph.n, Weight(0));
  for (const auto& [v, p] : paths)
    for (EdgeId id : p) costs[v] += inst.graph.edges[id].weight;

  Graph sub;
  sub.n = inst.graph.n;
  for (EdgeId id : N.edge_ids) {
    const auto& e = inst.graph.edges[id];
    sub.add_edge(e.tail, e.head, e.weight);
  }
  RDivision division = tau_chop_division(sub, costs, r, 5);
  std::set<VertexId> boundary(division.boundary_vertices.begin(),
                              division.boundary_vertices.end());

  Decomposition out;
  out.epsilon = epsilon;
  for (const auto& region : division.edge_partition) {
    std::set<EdgeId> ids;
    std::set<VertexId> span;
    for (EdgeId sid : region) {
      ids.insert(N.edge_ids[sid]);
      span.insert(sub.edges[sid].tail);
      span.insert(sub.edges[sid].head);
    }
    for (VertexId v : span) {
      if (!boundary.count(v)) continue;
      auto it = paths.find(v);
      if (it == paths.end()) continue;
      for (EdgeId id : it->second) {
        ids.insert(id);
        ids.insert(partner[id]);
      }
    }
    std::vector<EdgeId> part_ids(ids.begin(), ids.end());

    Pattern p;
    for (VertexId s : inst.pattern.terminals) {
      auto reach = reachable_from(inst.graph, part_ids, s);
      for (VertexId t : inst.pattern.terminals)
        if (s != t && reach[t]) p.demands.emplace_back(s, t);
    }
    std::set<VertexId> touched;
    for (auto& [s, t] : p.demands) {
      touched.insert(s);
      touched.insert(t);
    }
    p.terminals.assign(touched.begin(), touched.end());
    p.normalize();
    DecompositionPart part;
    part.subnetwork = make_solution(inst.graph, part_ids, p);
    part.pattern = std::move(p);
    out.parts.push_back(std::move(part));
  }
  return out;
}

DecompositionReport verify_decomposition(const Instance& inst, const Solution& N,
                                         const Decomposition& d) {
  DecompositionReport report;
  std::set<EdgeId> together;
  Weight sum(0);
  for (const auto& part : d.parts) {
    together.insert(part.subnetwork.edge_ids.begin(), part.subnetwork.edge_ids.end());
    sum += part.subnetwork.cost;
    report.max_part_terminals =
        std::max(report.max_part_terminals, (int)part.pattern.terminals.size());
  }
  std::vector<EdgeId> ids(together.begin(), together.end());
  report.feasible = check_feasible(inst.graph, ids, inst.pattern);
  Weight base = edge_set_cost(inst.graph, N.edge_ids);
  report.cost_ratio = base == Weight(0) ? Weight(1) : sum / base;
  return report;
}

}  // namespace dsn
