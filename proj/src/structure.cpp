#include "dsn/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dsn/errors.hpp"
#include "dsn/planarity.hpp"
#include "dsn/reach.hpp"

namespace dsn {

namespace {

// Undirected working unit of the degree reduction: one bidirected pair with
// the original-edge provenance of both directions.
struct Unit {
  VertexId a, b;
  Weight w;
  std::vector<EdgeId> fwd;  // origins of direction a->b
  std::vector<EdgeId> rev;  // origins of direction b->a
  bool alive = true;
};

VertexId unit_other(const Unit& u, VertexId x) { return u.a == x ? u.b : u.a; }

const std::vector<EdgeId>& unit_dir(const Unit& u, VertexId from) {
  return u.a == from ? u.fwd : u.rev;
}

struct Reduction {
  std::vector<Unit> units;
  std::vector<char> is_terminal;
  int n;
  TransformTrace trace;

  std::vector<std::vector<int>> incidence() const {
    std::vector<std::vector<int>> inc(n);
    for (int i = 0; i < (int)units.size(); ++i)
      if (units[i].alive) {
        inc[units[i].a].push_back(i);
        inc[units[i].b].push_back(i);
      }
    return inc;
  }

  std::vector<VertexId> neighbours(const std::vector<std::vector<int>>& inc,
                                   VertexId v) const {
    std::vector<VertexId> nb;
    for (int i : inc[v]) nb.push_back(unit_other(units[i], v));
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return nb;
  }

  bool adjacent_to_terminal(const std::vector<std::vector<int>>& inc, VertexId v) const {
    for (int i : inc[v])
      if (is_terminal[unit_other(units[i], v)]) return true;
    return false;
  }

  Graph underlying() const {
    Graph u;
    u.n = n;
    u.undirected = true;
    u.labels.assign(n, std::string());
    for (const Unit& unit : units)
      if (unit.alive) u.add_edge(std::min(unit.a, unit.b), std::max(unit.a, unit.b), unit.w);
    return u;
  }
};

}  // namespace

ReducedGraph reduce_degrees(const Graph& g, const std::vector<VertexId>& terminals) {
  if (!is_bidirected(g)) throw ContractError("reduce_degrees requires a bidirected graph");
  {
    std::set<VertexId> uniq(terminals.begin(), terminals.end());
    if (uniq.size() != terminals.size())
      throw ContractError("reduce_degrees: terminals must be distinct");
  }

  Reduction red;
  red.n = g.n;
  red.is_terminal.assign(g.n, 0);
  for (VertexId t : terminals) {
    if (t < 0 || t >= g.n) throw ContractError("reduce_degrees: terminal out of range");
    red.is_terminal[t] = 1;
  }
  red.trace.original_vertex_count = g.n;
  red.trace.original_edge_count = g.edge_count();

  std::vector<EdgeId> partner = bidirected_partner(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (partner[e] == -1) throw ContractError("reduce_degrees requires a bidirected graph");
    if (partner[e] < e) continue;
    Unit u;
    u.a = g.edges[e].tail;
    u.b = g.edges[e].head;
    u.w = g.edges[e].weight;
    u.fwd = {e};
    u.rev = {partner[e]};
    red.units.push_back(std::move(u));
  }

  // Terminal splitting: every terminal with at least one edge gets a
  // zero-weight Steiner splitter that takes over its incidences, so
  // afterwards each such terminal has exactly one (Steiner) neighbour.
  {
    auto inc = red.incidence();
    std::vector<VertexId> flagged;
    for (VertexId t = 0; t < g.n; ++t)
      if (red.is_terminal[t] && !inc[t].empty()) flagged.push_back(t);
    for (VertexId t : flagged) {
      auto cur = red.incidence();
      VertexId v = red.n++;
      red.is_terminal.push_back(0);
      for (int i : cur[t]) {
        if (red.units[i].a == t)
          red.units[i].a = v;
        else
          red.units[i].b = v;
      }
      Unit link;
      link.a = t;
      link.b = v;
      link.w = Weight(0);
      red.units.push_back(std::move(link));
      red.trace.ops.push_back({TransformKind::SplitTerminal, {t}, {v}});
    }
  }

  // Steiner splitting down to three neighbours. On planar graphs the two
  // relocated units are consecutive around the vertex in a planar rotation,
  // which keeps the graph planar.
  while (true) {
    auto inc = red.incidence();
    VertexId v = -1;
    for (VertexId x = 0; x < red.n && v == -1; ++x)
      if (!red.is_terminal[x] && red.neighbours(inc, x).size() > 3) v = x;
    if (v == -1) break;

    int u1 = -1, u2 = -1;
    Graph und = red.underlying();
    auto rotation = planar_rotation(und);
    if (rotation.has_value()) {
      // Underlying edge ids enumerate alive units in order; recover them.
      std::vector<int> alive_units;
      for (int i = 0; i < (int)red.units.size(); ++i)
        if (red.units[i].alive) alive_units.push_back(i);
      const std::vector<EdgeId>& around = (*rotation)[v];
      u1 = alive_units[around[0]];
      u2 = alive_units[around[1]];
    } else {
      std::vector<std::pair<VertexId, int>> by_nb;
      for (int i : inc[v]) by_nb.push_back({unit_other(red.units[i], v), i});
      std::sort(by_nb.begin(), by_nb.end());
      u1 = by_nb[0].second;
      u2 = by_nb[1].second;
    }

    VertexId u = red.n++;
    red.is_terminal.push_back(0);
    for (int i : {u1, u2}) {
      if (red.units[i].a == v)
        red.units[i].a = u;
      else
        red.units[i].b = u;
    }
    Unit link;
    link.a = u;
    link.b = v;
    link.w = Weight(0);
    red.units.push_back(std::move(link));
    red.trace.ops.push_back({TransformKind::SplitSteiner, {v}, {u}});
  }

  // Cleanup loop: drop the more expensive of parallel units, delete Steiner
  // vertices left with at most one neighbour, and contract the pass-through
  // Steiner vertices of degree two. Splitters next to terminals stay.
  bool changed = true;
  while (changed) {
    changed = false;

    std::map<std::pair<VertexId, VertexId>, std::vector<int>> groups;
    for (int i = 0; i < (int)red.units.size(); ++i)
      if (red.units[i].alive) {
        auto key = std::minmax(red.units[i].a, red.units[i].b);
        groups[{key.first, key.second}].push_back(i);
      }
    for (auto& [key, list] : groups) {
      if (list.size() < 2) continue;
      int best = list[0];
      for (int i : list)
        if (red.units[i].w < red.units[best].w) best = i;
      for (int i : list)
        if (i != best) {
          red.units[i].alive = false;
          changed = true;
        }
    }

    auto inc = red.incidence();
    for (VertexId v = 0; v < red.n; ++v) {
      if (red.is_terminal[v] || inc[v].empty()) continue;
      if (red.adjacent_to_terminal(inc, v)) continue;
      auto nb = red.neighbours(inc, v);
      if (nb.size() <= 1) {
        for (int i : inc[v]) red.units[i].alive = false;
        changed = true;
        inc = red.incidence();
      }
    }

    inc = red.incidence();
    for (VertexId v = 0; v < red.n; ++v) {
      if (red.is_terminal[v] || red.adjacent_to_terminal(inc, v)) continue;
      if (inc[v].size() != 2) continue;
      int i1 = inc[v][0], i2 = inc[v][1];
      VertexId x = unit_other(red.units[i1], v), y = unit_other(red.units[i2], v);
      if (x == y) continue;  // parallel pair, handled above next round
      Unit merged;
      merged.a = x;
      merged.b = y;
      merged.w = red.units[i1].w + red.units[i2].w;
      merged.fwd = unit_dir(red.units[i1], x);
      {
        auto& tail = unit_dir(red.units[i2], v);
        merged.fwd.insert(merged.fwd.end(), tail.begin(), tail.end());
      }
      merged.rev = unit_dir(red.units[i2], y);
      {
        auto& tail = unit_dir(red.units[i1], v);
        merged.rev.insert(merged.rev.end(), tail.begin(), tail.end());
      }
      red.units[i1].alive = false;
      red.units[i2].alive = false;
      red.units.push_back(std::move(merged));
      red.trace.ops.push_back({TransformKind::ContractDegree2, {v, x, y}, {}});
      changed = true;
      break;  // incidence is stale; restart the cleanup loop
    }
  }

  ReducedGraph out;
  out.graph.n = red.n;
  out.graph.labels = g.labels;
  out.graph.labels.resize(red.n);
  for (const Unit& u : red.units) {
    if (!u.alive) continue;
    out.graph.add_edge(u.a, u.b, u.w);
    out.trace.edge_origin.push_back(u.fwd);
    out.graph.add_edge(u.b, u.a, u.w);
    out.trace.edge_origin.push_back(u.rev);
  }
  out.trace.ops = std::move(red.trace.ops);
  out.trace.original_vertex_count = red.trace.original_vertex_count;
  out.trace.original_edge_count = red.trace.original_edge_count;
  return out;
}

std::vector<EdgeId> map_back(const TransformTrace& trace,
                             const std::vector<EdgeId>& reduced_edges) {
  std::vector<EdgeId> out;
  for (EdgeId e : reduced_edges) {
    if (e < 0 || e >= (EdgeId)trace.edge_origin.size())
      throw ContractError("map_back: edge id not in trace");
    for (EdgeId o : trace.edge_origin[e]) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> tie_break_rank(const Graph& g) {
  std::vector<EdgeId> partner = bidirected_partner(g);
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  auto unit_id = [&](EdgeId e) {
    return partner[e] == -1 ? e : std::min(e, partner[e]);
  };
  std::sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) {
    const Edge& ex = g.edges[x];
    const Edge& ey = g.edges[y];
    if (ex.weight != ey.weight) return ex.weight < ey.weight;
    auto px = std::minmax(ex.tail, ex.head);
    auto py = std::minmax(ey.tail, ey.head);
    if (px != py) return px < py;
    if (unit_id(x) != unit_id(y)) return unit_id(x) < unit_id(y);
    return x < y;
  });
  std::vector<int> rank(g.edge_count());
  for (int i = 0; i < (int)order.size(); ++i) rank[order[i]] = i;
  return rank;
}

namespace {

// Cheapest directed a->b edge of g, by weight then tie-break rank.
EdgeId cheapest_arc(const Graph& g, const std::vector<int>& rank, VertexId a, VertexId b) {
  EdgeId best = -1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edges[e].tail != a || g.edges[e].head != b) continue;
    if (best == -1 || g.edges[e].weight < g.edges[best].weight ||
        (g.edges[e].weight == g.edges[best].weight && rank[e] < rank[best]))
      best = e;
  }
  return best;
}

std::vector<std::vector<char>> closure(const Graph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::vector<char>> reach;
  for (VertexId v = 0; v < g.n; ++v) reach.push_back(reachable_from(g, ids, v));
  return reach;
}

// Removes every solution edge lying over the cycle's undirected positions
// and inserts one full directed orientation of the cycle.
Solution rewire_cycle(const Graph& g, const Solution& n,
                      const std::vector<VertexId>& cyc, const Pattern& p) {
  int l = (int)cyc.size();
  std::vector<int> rank = tie_break_rank(g);
  std::set<std::pair<VertexId, VertexId>> positions;
  for (int i = 0; i < l; ++i) {
    VertexId a = cyc[i], b = cyc[(i + 1) % l];
    positions.insert(std::minmax(a, b));
  }

  std::vector<EdgeId> kept, removed;
  for (EdgeId e : n.edge_ids) {
    auto key = std::minmax(g.edges[e].tail, g.edges[e].head);
    if (positions.count({key.first, key.second}))
      removed.push_back(e);
    else
      kept.push_back(e);
  }

  auto orientation = [&](bool forward) {
    std::vector<EdgeId> arcs;
    for (int i = 0; i < l; ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % l];
      if (!forward) std::swap(a, b);
      EdgeId e = cheapest_arc(g, rank, a, b);
      if (e == -1) throw ContractError("cycle orientation missing a directed edge");
      arcs.push_back(e);
    }
    return arcs;
  };
  std::vector<EdgeId> fwd = orientation(true), bwd = orientation(false);

  auto cost_of = [&](const std::vector<EdgeId>& arcs) {
    Weight c;
    for (EdgeId e : arcs) c += g.edges[e].weight;
    return c;
  };
  auto shared_with_n = [&](const std::vector<EdgeId>& arcs) {
    int s = 0;
    for (EdgeId e : arcs)
      if (std::binary_search(n.edge_ids.begin(), n.edge_ids.end(), e)) s++;
    return s;
  };
  auto rank_seq = [&](const std::vector<EdgeId>& arcs) {
    std::vector<int> r;
    for (EdgeId e : arcs) r.push_back(rank[e]);
    std::sort(r.begin(), r.end());
    return r;
  };

  std::vector<EdgeId> chosen;
  Weight cf = cost_of(fwd), cb = cost_of(bwd);
  if (cf != cb)
    chosen = cf < cb ? fwd : bwd;
  else if (shared_with_n(fwd) != shared_with_n(bwd))
    chosen = shared_with_n(fwd) > shared_with_n(bwd) ? fwd : bwd;
  else
    chosen = rank_seq(fwd) <= rank_seq(bwd) ? fwd : bwd;

  std::vector<EdgeId> ids = kept;
  ids.insert(ids.end(), chosen.begin(), chosen.end());
  Solution out = make_solution(g, std::move(ids), p);

  if (n.cost < out.cost)
    throw std::logic_error("cycle rewiring increased the cost");
  auto before = closure(g, n.edge_ids);
  auto after = closure(g, out.edge_ids);
  for (VertexId u = 0; u < g.n; ++u)
    for (VertexId v = 0; v < g.n; ++v)
      if (before[u][v] && !after[u][v])
        throw std::logic_error("cycle rewiring lost a reachable pair");
  return out;
}

}  // namespace

Solution replace_polycycle(const Graph& g, const Solution& n,
                           const std::vector<EdgeId>& cycle, const Pattern& p) {
  if (!is_bidirected(g)) throw ContractError("replace_polycycle requires a bidirected graph");
  int l = (int)cycle.size();
  if (l < 2) throw ContractError("poly-cycle needs at least two edges");
  for (EdgeId e : cycle) {
    if (e < 0 || e >= g.edge_count()) throw ContractError("poly-cycle edge out of range");
    if (!std::binary_search(n.edge_ids.begin(), n.edge_ids.end(), e))
      throw ContractError("poly-cycle edge is not part of the solution");
  }
  // No reverse pairs inside a poly-cycle.
  std::vector<EdgeId> partner = bidirected_partner(g);
  std::set<EdgeId> in_cycle(cycle.begin(), cycle.end());
  for (EdgeId e : cycle)
    if (partner[e] != -1 && in_cycle.count(partner[e]))
      throw ContractError("poly-cycle contains a reverse edge pair");

  // Consecutive edges share one endpoint; recover the vertex sequence.
  auto shares = [&](EdgeId e, EdgeId f) -> VertexId {
    VertexId et = g.edges[e].tail, eh = g.edges[e].head;
    VertexId ft = g.edges[f].tail, fh = g.edges[f].head;
    if (et == ft || et == fh) {
      if (eh == ft || eh == fh) {
        // Both endpoints shared: a two-edge cycle over one vertex pair.
        return -2;
      }
      return et;
    }
    if (eh == ft || eh == fh) return eh;
    return -1;
  };
  std::vector<VertexId> cyc(l);
  for (int i = 0; i < l; ++i) {
    VertexId s = shares(cycle[i], cycle[(i + 1) % l]);
    if (s == -1) throw ContractError("poly-cycle edges are not consecutive");
    if (s == -2) {
      if (l != 2) throw ContractError("poly-cycle revisits a vertex pair");
      cyc = {g.edges[cycle[0]].tail, g.edges[cycle[0]].head};
      std::sort(cyc.begin(), cyc.end());
      return rewire_cycle(g, n, cyc, p);
    }
    cyc[(i + 1) % l] = s;
  }
  std::set<VertexId> uniq(cyc.begin(), cyc.end());
  if ((int)uniq.size() != l) throw ContractError("poly-cycle revisits a vertex");
  for (int i = 0; i < l; ++i) {
    auto want = std::minmax(cyc[i], cyc[(i + 1) % l]);
    auto got = std::minmax(g.edges[cycle[i]].tail, g.edges[cycle[i]].head);
    if (want != got) throw ContractError("poly-cycle edge sequence is inconsistent");
  }
  return rewire_cycle(g, n, cyc, p);
}

namespace {

// Two internally vertex-disjoint undirected paths between u and v using
// only the given units, via two augmentations of a unit-capacity flow with
// split vertices. Returns the two paths as vertex sequences.
bool two_disjoint_paths(int n, const std::vector<std::pair<VertexId, VertexId>>& units,
                        VertexId u, VertexId v,
                        std::vector<VertexId>& path1, std::vector<VertexId>& path2) {
  // Node x becomes x_in = 2x, x_out = 2x+1.
  int nn = 2 * n;
  std::map<std::pair<int, int>, int> cap;
  auto add = [&](int a, int b, int c) { cap[{a, b}] += c; };
  for (VertexId x = 0; x < n; ++x) add(2 * x, 2 * x + 1, x == u || x == v ? 2 : 1);
  for (auto& [a, b] : units) {
    add(2 * a + 1, 2 * b, 1);
    add(2 * b + 1, 2 * a, 1);
  }
  int source = 2 * u + 1, sink = 2 * v;

  auto augment = [&]() {
    std::vector<int> prev(nn, -1);
    std::vector<int> queue = {source};
    prev[source] = source;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      if (x == sink) break;
      for (auto& [key, c] : cap) {
        if (key.first != x || c <= 0) continue;
        if (prev[key.second] == -1) {
          prev[key.second] = x;
          queue.push_back(key.second);
        }
      }
    }
    if (prev[sink] == -1) return false;
    int x = sink;
    while (x != source) {
      int p = prev[x];
      cap[{p, x}] -= 1;
      cap[{x, p}] += 1;
      x = p;
    }
    return true;
  };
  if (!augment() || !augment()) return false;

  // Rebuild flows from residuals: original capacity minus remaining.
  std::map<std::pair<int, int>, int> flow;
  std::map<std::pair<int, int>, int> orig;
  for (VertexId x = 0; x < n; ++x) orig[{2 * x, 2 * x + 1}] = (x == u || x == v) ? 2 : 1;
  for (auto& [a, b] : units) {
    orig[{2 * a + 1, 2 * b}] += 1;
    orig[{2 * b + 1, 2 * a}] += 1;
  }
  for (auto& [key, c] : orig) {
    int remaining = cap.count(key) ? cap[key] : 0;
    if (c > remaining) flow[key] = c - remaining;
  }

  auto trace = [&](std::vector<VertexId>& path) {
    path.clear();
    path.push_back(u);
    int x = source;
    while (x != sink) {
      bool moved = false;
      for (auto& [key, f] : flow) {
        if (key.first != x || f <= 0) continue;
        flow[key] -= 1;
        x = key.second;
        if (x % 2 == 0) path.push_back(x / 2);
        moved = true;
        break;
      }
      if (!moved) return false;
      if (x % 2 == 0 && x != sink) {
        // pass through the split node
        if (!flow.count({x, x + 1}) || flow[{x, x + 1}] <= 0) return false;
        flow[{x, x + 1}] -= 1;
        x = x + 1;
      }
    }
    return true;
  };
  return trace(path1) && trace(path2);
}

}  // namespace

Solution canonicalize_components(const Graph& g, const Solution& n, const Pattern& p) {
  if (!is_bidirected(g))
    throw ContractError("canonicalize_components requires a bidirected graph");
  Solution cur = make_solution(g, n.edge_ids, p);

  while (true) {
    // Underlying units of the current solution.
    std::map<std::pair<VertexId, VertexId>, int> unit_index;
    std::vector<std::pair<VertexId, VertexId>> units;
    Graph und;
    und.n = g.n;
    und.undirected = true;
    und.labels.assign(g.n, std::string());
    for (EdgeId e : cur.edge_ids) {
      auto key = std::minmax(g.edges[e].tail, g.edges[e].head);
      if (unit_index.emplace(std::make_pair(key.first, key.second), (int)units.size()).second) {
        units.push_back({key.first, key.second});
        und.add_edge(key.first, key.second, g.edges[e].weight);
      }
    }
    std::vector<EdgeId> unit_ids(und.edge_count());
    std::iota(unit_ids.begin(), unit_ids.end(), 0);

    auto reach = closure(g, cur.edge_ids);
    BiconnectedSplit bc = biconnected_components(und, unit_ids);

    bool replaced = false;
    for (auto& comp : bc.components) {
      if (comp.size() < 2) continue;
      std::vector<VertexId> verts;
      for (EdgeId ue : comp) {
        verts.push_back(und.edges[ue].tail);
        verts.push_back(und.edges[ue].head);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

      VertexId bad_u = -1, bad_v = -1;
      for (VertexId a : verts) {
        for (VertexId b : verts)
          if (a != b && !reach[a][b]) {
            bad_u = a;
            bad_v = b;
            break;
          }
        if (bad_u != -1) break;
      }
      if (bad_u == -1) continue;

      std::vector<std::pair<VertexId, VertexId>> comp_units;
      for (EdgeId ue : comp) comp_units.push_back({und.edges[ue].tail, und.edges[ue].head});
      std::vector<VertexId> p1, p2;
      if (!two_disjoint_paths(g.n, comp_units, bad_u, bad_v, p1, p2))
        throw std::logic_error("expected two disjoint paths in a 2-connected component");
      std::vector<VertexId> cyc = p1;
      for (int i = (int)p2.size() - 2; i >= 1; --i) cyc.push_back(p2[i]);
      cur = rewire_cycle(g, cur, cyc, p);
      replaced = true;
      break;
    }
    if (!replaced) break;
  }

  // The condensation of the result is a poly-forest: its underlying graph
  // is acyclic (reverse pairs cannot occur between distinct components).
  Condensation cond = scc_condensation(g, cur.edge_ids);
  std::vector<int> uf(cond.dag.n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::set<std::pair<int, int>> und_dag;
  for (const Edge& e : cond.dag.edges) {
    auto key = std::minmax(e.tail, e.head);
    if (!und_dag.insert({key.first, key.second}).second) continue;
    int a = find(e.tail), b = find(e.head);
    if (a == b) throw std::logic_error("condensation is not a poly-forest");
    uf[a] = b;
  }
  return cur;
}

Solution prune_minimal(const Graph& g, const Solution& n, const Pattern& p) {
  if (!check_feasible(g, n.edge_ids, p))
    throw ContractError("prune_minimal requires a feasible solution");
  std::vector<int> rank = tie_break_rank(g);
  std::vector<EdgeId> order = n.edge_ids;
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return rank[a] > rank[b]; });
  std::set<EdgeId> kept(n.edge_ids.begin(), n.edge_ids.end());
  for (EdgeId e : order) {
    kept.erase(e);
    std::vector<EdgeId> ids(kept.begin(), kept.end());
    if (!check_feasible(g, ids, p)) kept.insert(e);
  }
  return make_solution(g, std::vector<EdgeId>(kept.begin(), kept.end()), p);
}

}  // namespace dsn
