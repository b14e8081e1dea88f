#include "dsn/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "dsn/errors.hpp"
#include "dsn/planarity.hpp"
#include "dsn/reach.hpp"
#include "dsn/structure.hpp"
#include "dsn/treewidth.hpp"

namespace dsn {

namespace {

Graph edge_subgraph(const Graph& g, const std::vector<EdgeId>& ids) {
  Graph s;
  s.n = g.n;
  s.undirected = g.undirected;
  s.labels.assign(g.n, std::string());
  for (EdgeId e : ids) s.add_edge(g.edges[e].tail, g.edges[e].head, g.edges[e].weight);
  return s;
}

Graph underlying_simple(const Graph& g, const std::vector<EdgeId>& ids) {
  Graph u;
  u.n = g.n;
  u.undirected = true;
  u.labels.assign(g.n, std::string());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e : ids) {
    auto key = std::minmax(g.edges[e].tail, g.edges[e].head);
    if (seen.insert({key.first, key.second}).second)
      u.add_edge(key.first, key.second, g.edges[e].weight);
  }
  return u;
}

// Poly-forest test counting multiplicity: reverse pairs and parallel edges
// both produce a repeated unit and disqualify.
bool is_poly_forest(const Graph& g, const std::vector<EdgeId>& ids) {
  std::set<std::pair<VertexId, VertexId>> units;
  std::vector<int> uf(g.n);
  for (int i = 0; i < g.n; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (EdgeId e : ids) {
    auto key = std::minmax(g.edges[e].tail, g.edges[e].head);
    if (!units.insert({key.first, key.second}).second) return false;
    int a = find(key.first), b = find(key.second);
    if (a == b) return false;
    uf[a] = b;
  }
  return true;
}

struct CycleShape {
  bool extendable = false;  // could still grow into one directed cycle
  bool closed = false;      // is exactly one directed cycle
  std::vector<VertexId> cycle_vertices;
};

CycleShape cycle_shape(const Graph& g, const std::vector<EdgeId>& ids) {
  CycleShape shape;
  std::map<VertexId, EdgeId> out;
  std::map<VertexId, int> indeg;
  for (EdgeId e : ids) {
    if (!out.emplace(g.edges[e].tail, e).second) return shape;
    if (++indeg[g.edges[e].head] > 1) return shape;
  }
  // Trace each maximal chain; count closed cycles.
  std::set<EdgeId> visited;
  int closed = 0, open_chains = 0;
  for (EdgeId e : ids) {
    if (visited.count(e)) continue;
    // Walk back to the start of this chain.
    VertexId start = g.edges[e].tail;
    std::set<VertexId> back_seen;
    while (indeg.count(start) && back_seen.insert(start).second) {
      VertexId prev = -1;
      for (EdgeId f : ids)
        if (g.edges[f].head == start) prev = g.edges[f].tail;
      if (prev == -1) break;
      start = prev;
      if (start == g.edges[e].tail) break;  // closed loop
    }
    std::vector<VertexId> verts;
    VertexId at = start;
    bool loop = false;
    while (out.count(at)) {
      EdgeId f = out[at];
      if (visited.count(f)) break;
      visited.insert(f);
      verts.push_back(at);
      at = g.edges[f].head;
      if (at == start) {
        loop = true;
        break;
      }
    }
    if (loop) {
      closed++;
      shape.cycle_vertices = verts;
    } else {
      open_chains++;
    }
  }
  shape.closed = closed == 1 && open_chains == 0 && visited.size() == ids.size();
  shape.extendable = closed == 0 || shape.closed;
  return shape;
}

}  // namespace

bool solution_in_class(const Graph& g, const std::vector<EdgeId>& ids,
                       const SolutionClass& cls,
                       const std::vector<VertexId>& terminals) {
  switch (cls.kind) {
    case SolutionClass::Kind::Any:
      return true;
    case SolutionClass::Kind::Planar:
      return is_planar(edge_subgraph(g, ids));
    case SolutionClass::Kind::PolyTree:
      return is_poly_forest(g, ids);
    case SolutionClass::Kind::TreewidthAtMost:
      if (cls.omega <= 1) return is_poly_forest(g, ids);
      return treewidth_exact(underlying_simple(g, ids)) <= cls.omega;
    case SolutionClass::Kind::Cycle: {
      if (ids.empty()) return false;
      CycleShape shape = cycle_shape(g, ids);
      if (!shape.closed) return false;
      std::set<VertexId> on(shape.cycle_vertices.begin(), shape.cycle_vertices.end());
      for (VertexId t : terminals)
        if (!on.count(t)) return false;
      return true;
    }
  }
  return false;
}

namespace {

// Per-edge search state.
enum : int8_t { kUndecided = 0, kIncluded = 1, kExcluded = 2 };

// Admissible completion bound: for every demand, the cheapest residual path
// where included edges are free and excluded edges are gone. nullopt when
// some demand can no longer be satisfied.
std::optional<Weight> residual_bound(const Graph& g, const Pattern& p,
                                     const std::vector<int8_t>& state) {
  Weight worst;
  for (auto& [s, t] : p.demands) {
    std::vector<std::optional<Weight>> dist(g.n);
    std::vector<char> done(g.n, 0);
    dist[s] = Weight(0);
    while (true) {
      int u = -1;
      for (int v = 0; v < g.n; ++v)
        if (!done[v] && dist[v] && (u == -1 || *dist[v] < *dist[u])) u = v;
      if (u == -1) break;
      done[u] = 1;
      if (u == t) break;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (state[e] == kExcluded) continue;
        VertexId h = -1;
        if (g.edges[e].tail == u) h = g.edges[e].head;
        else if (g.undirected && g.edges[e].head == u) h = g.edges[e].tail;
        if (h == -1) continue;
        Weight w = state[e] == kIncluded ? Weight(0) : g.edges[e].weight;
        Weight cand = *dist[u] + w;
        if (!dist[h] || cand < *dist[h]) dist[h] = cand;
      }
    }
    if (!dist[t]) return std::nullopt;
    if (*dist[t] > worst) worst = *dist[t];
  }
  return worst;
}

struct SearchShared {
  const Graph* g;
  const Pattern* pattern;
  const SolutionClass* cls;
  std::vector<EdgeId> order;  // edges in ascending tie-break rank
  std::vector<int> rank;
  long long nodes = 0;
  long long node_cap = 0;
  std::chrono::steady_clock::time_point deadline;
};

std::vector<int> rank_seq(const std::vector<int>& rank, const std::vector<EdgeId>& ids) {
  std::vector<int> seq;
  for (EdgeId e : ids) seq.push_back(rank[e]);
  std::sort(seq.begin(), seq.end());
  return seq;
}

void tick(SearchShared& sh) {
  if (++sh.nodes > sh.node_cap) throw CapacityError("search budget exhausted");
  if ((sh.nodes & 1023) == 0 && std::chrono::steady_clock::now() > sh.deadline)
    throw CapacityError("search time cap exceeded");
}

// Monotone violation check: no superset of `ids` can belong to the class.
bool class_prunes(const SearchShared& sh, const std::vector<EdgeId>& ids) {
  const SolutionClass& cls = *sh.cls;
  switch (cls.kind) {
    case SolutionClass::Kind::Any:
      return false;
    case SolutionClass::Kind::Planar:
      return !is_planar(edge_subgraph(*sh.g, ids));
    case SolutionClass::Kind::PolyTree:
      return !is_poly_forest(*sh.g, ids);
    case SolutionClass::Kind::TreewidthAtMost: {
      if (cls.omega <= 1) return !is_poly_forest(*sh.g, ids);
      // Cheap necessary bound: a graph of treewidth w has < w * n edges.
      Graph u = underlying_simple(*sh.g, ids);
      return u.edge_count() > cls.omega * u.n;
    }
    case SolutionClass::Kind::Cycle:
      return !cycle_shape(*sh.g, ids).extendable;
  }
  return false;
}

struct BruteState {
  std::optional<Solution> best;
  std::vector<int> best_seq;
};

void brute_dfs(SearchShared& sh, std::vector<int8_t>& state, std::vector<EdgeId>& included,
               Weight cost, size_t idx, BruteState& out) {
  tick(sh);
  auto bound = residual_bound(*sh.g, *sh.pattern, state);
  if (!bound) return;
  Weight f = cost + *bound;
  if (out.best && f > out.best->cost) return;

  if (class_prunes(sh, included)) return;

  std::vector<EdgeId> sorted = included;
  std::sort(sorted.begin(), sorted.end());
  if (check_feasible(*sh.g, sorted, *sh.pattern)) {
    bool in_class = solution_in_class(*sh.g, sorted, *sh.cls, sh.pattern->terminals);
    if (in_class) {
      auto seq = rank_seq(sh.rank, sorted);
      if (!out.best || cost < out.best->cost ||
          (cost == out.best->cost && seq < out.best_seq)) {
        Solution s;
        s.edge_ids = sorted;
        s.cost = cost;
        s.feasible = true;
        out.best = s;
        out.best_seq = seq;
      }
      return;  // supersets only add cost or worse tie-break keys
    }
    // Feasible but outside a monotone class: supersets stay outside.
    if (sh.cls->kind == SolutionClass::Kind::Planar ||
        sh.cls->kind == SolutionClass::Kind::PolyTree)
      return;
    if (sh.cls->kind == SolutionClass::Kind::TreewidthAtMost) {
      if (sh.cls->omega <= 1) return;
      if (treewidth_exact(underlying_simple(*sh.g, sorted)) > sh.cls->omega) return;
      // Treewidth fits but the cheap bound fired elsewhere; fall through.
    }
  }
  if (idx == sh.order.size()) return;

  EdgeId e = sh.order[idx];
  state[e] = kIncluded;
  included.push_back(e);
  brute_dfs(sh, state, included, cost + sh.g->edges[e].weight, idx + 1, out);
  included.pop_back();
  state[e] = kExcluded;
  brute_dfs(sh, state, included, cost, idx + 1, out);
  state[e] = kUndecided;
}

void validate_budget(const OracleBudget& budget) {
  if (budget.max_edges_enumerated <= 0 || budget.time_cap_ms <= 0)
    throw ContractError("search budget caps must be positive");
}

}  // namespace

Solution brute_force_dsn(const Instance& inst, const OracleBudget& budget) {
  validate_budget(budget);
  inst.validate();
  const Graph& g = inst.graph;

  SearchShared sh;
  sh.g = &g;
  sh.pattern = &inst.pattern;
  sh.cls = &inst.solution_class;
  sh.rank = tie_break_rank(g);
  sh.order.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) sh.order[sh.rank[e]] = e;
  sh.node_cap = budget.max_edges_enumerated;
  sh.deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.time_cap_ms);

  std::vector<int8_t> state(g.edge_count(), kUndecided);
  std::vector<EdgeId> included;
  BruteState out;
  brute_dfs(sh, state, included, Weight(0), 0, out);
  if (!out.best) {
    Solution none;
    none.feasible = false;
    return none;
  }
  return *out.best;
}

namespace {

// Shared Dreyfus-Wagner core. Arcs run from the tree root outward; for the
// undirected variant both directions of every edge are admitted.
struct DreyfusResult {
  std::optional<Weight> cost;
  std::vector<EdgeId> edges;
};

DreyfusResult dreyfus_core(const Graph& g, bool directed, VertexId root_or_minus1,
                           const std::vector<VertexId>& terminals) {
  int p = (int)terminals.size();
  int n = g.n;
  int masks = 1 << p;
  const uint8_t kBase = 0, kSplit = 1, kMove = 2;

  std::vector<std::vector<std::optional<Weight>>> dp(masks);
  std::vector<std::vector<uint8_t>> tag(masks);
  std::vector<std::vector<int>> split(masks);
  std::vector<std::vector<EdgeId>> via(masks);
  for (int S = 1; S < masks; ++S) {
    dp[S].assign(n, std::nullopt);
    tag[S].assign(n, kBase);
    split[S].assign(n, 0);
    via[S].assign(n, -1);
  }

  auto relax_closure = [&](int S) {
    std::vector<char> done(n, 0);
    while (true) {
      int u = -1;
      for (int v = 0; v < n; ++v)
        if (!done[v] && dp[S][v] && (u == -1 || *dp[S][v] < *dp[S][u])) u = v;
      if (u == -1) break;
      done[u] = 1;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        // Moving the root from u to v costs the v->u arc.
        VertexId from_v = -1;
        if (g.edges[e].tail == u && !directed) from_v = g.edges[e].head;
        if (g.edges[e].head == u) from_v = g.edges[e].tail;
        if (from_v == -1) continue;
        Weight cand = *dp[S][u] + g.edges[e].weight;
        if (!dp[S][from_v] || cand < *dp[S][from_v]) {
          dp[S][from_v] = cand;
          tag[S][from_v] = kMove;
          via[S][from_v] = e;
        }
      }
    }
  };

  for (int i = 0; i < p; ++i) {
    int S = 1 << i;
    dp[S][terminals[i]] = Weight(0);
    relax_closure(S);
  }
  for (int S = 1; S < masks; ++S) {
    if (!(S & (S - 1))) continue;  // handled above
    int low = S & (-S);
    for (int T = (S - 1) & S; T; T = (T - 1) & S) {
      if (!(T & low)) continue;  // canonical split: T holds the lowest bit
      int U = S ^ T;
      for (int v = 0; v < n; ++v) {
        if (!dp[T][v] || !dp[U][v]) continue;
        Weight cand = *dp[T][v] + *dp[U][v];
        if (!dp[S][v] || cand < *dp[S][v]) {
          dp[S][v] = cand;
          tag[S][v] = kSplit;
          split[S][v] = T;
        }
      }
    }
    relax_closure(S);
  }

  DreyfusResult res;
  int full = masks - 1;
  VertexId anchor = directed ? root_or_minus1 : terminals[0];
  if (p == 0) {
    res.cost = Weight(0);
    return res;
  }
  if (!dp[full][anchor]) return res;
  res.cost = *dp[full][anchor];

  std::set<EdgeId> picked;
  std::vector<std::pair<int, VertexId>> stack = {{full, anchor}};
  while (!stack.empty()) {
    auto [S, v] = stack.back();
    stack.pop_back();
    if (!(S & (S - 1)) && v == terminals[__builtin_ctz(S)] && tag[S][v] != kMove) continue;
    if (tag[S][v] == kSplit) {
      stack.push_back({split[S][v], v});
      stack.push_back({S ^ split[S][v], v});
    } else {
      EdgeId e = via[S][v];
      picked.insert(e);
      VertexId next = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
      if (directed) next = g.edges[e].head;
      stack.push_back({S, next});
    }
  }
  res.edges.assign(picked.begin(), picked.end());
  return res;
}

Solution infeasible_solution() {
  Solution s;
  s.feasible = false;
  return s;
}

std::vector<VertexId> dedup_terminals(const std::vector<VertexId>& R, const Graph& g) {
  std::vector<VertexId> t = R;
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (VertexId v : t)
    if (v < 0 || v >= g.n) throw ContractError("terminal out of range");
  return t;
}

}  // namespace

Solution dreyfus_wagner_st(const Graph& ug, const std::vector<VertexId>& R,
                           int terminal_cap) {
  auto terminals = dedup_terminals(R, ug);
  if ((int)terminals.size() > terminal_cap)
    throw CapacityError("terminal count exceeds the Steiner tree cap");
  if (terminals.size() <= 1) {
    Solution s;
    s.feasible = true;
    return s;
  }
  DreyfusResult res = dreyfus_core(ug, false, -1, terminals);
  if (!res.cost) return infeasible_solution();
  Solution s;
  s.edge_ids = res.edges;
  s.cost = edge_set_cost(ug, res.edges);
  s.feasible = true;
  return s;
}

Solution dreyfus_wagner_dst(const Graph& g, VertexId root, const std::vector<VertexId>& R,
                            int terminal_cap) {
  if (root < 0 || root >= g.n) throw ContractError("root out of range");
  auto terminals = dedup_terminals(R, g);
  terminals.erase(std::remove(terminals.begin(), terminals.end(), root), terminals.end());
  if ((int)terminals.size() > terminal_cap)
    throw CapacityError("terminal count exceeds the Steiner tree cap");
  if (terminals.empty()) {
    Solution s;
    s.feasible = true;
    return s;
  }
  DreyfusResult res = dreyfus_core(g, true, root, terminals);
  if (!res.cost) return infeasible_solution();
  Solution s;
  s.edge_ids = res.edges;
  s.cost = edge_set_cost(g, res.edges);
  s.feasible = true;
  return s;
}

Solution steiner_forest_fpt(const Graph& ug,
                            const std::vector<std::pair<VertexId, VertexId>>& pairs,
                            int terminal_cap) {
  std::vector<VertexId> terminals;
  for (auto& [a, b] : pairs) {
    terminals.push_back(a);
    terminals.push_back(b);
  }
  terminals = dedup_terminals(terminals, ug);
  if ((int)terminals.size() > terminal_cap)
    throw CapacityError("terminal count exceeds the Steiner forest cap");
  if (terminals.empty()) {
    Solution s;
    s.feasible = true;
    return s;
  }

  auto index_of = [&](VertexId v) {
    return (int)(std::lower_bound(terminals.begin(), terminals.end(), v) - terminals.begin());
  };

  // Demand pairs force their endpoints into one group.
  int p = (int)terminals.size();
  std::vector<int> uf(p);
  for (int i = 0; i < p; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto& [a, b] : pairs) uf[find(index_of(a))] = find(index_of(b));

  std::vector<uint32_t> atoms;
  {
    std::map<int, uint32_t> by_root;
    for (int i = 0; i < p; ++i) by_root[find(i)] |= 1u << i;
    for (auto& [root, mask] : by_root) atoms.push_back(mask);
  }

  // Tree cost per terminal mask, memoized across partitions.
  std::map<uint32_t, std::optional<std::pair<Weight, std::vector<EdgeId>>>> block;
  auto solve_block = [&](uint32_t mask) -> const std::optional<std::pair<Weight, std::vector<EdgeId>>>& {
    auto it = block.find(mask);
    if (it != block.end()) return it->second;
    std::vector<VertexId> sub;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i)) sub.push_back(terminals[i]);
    Solution s = dreyfus_wagner_st(ug, sub, std::max(terminal_cap, kDefaultDreyfusCap));
    auto& slot = block[mask];
    if (s.feasible) slot = std::make_pair(s.cost, s.edge_ids);
    return slot;
  };

  // Every atom must be connectable on its own, else no partition helps.
  for (uint32_t a : atoms)
    if (!solve_block(a)) return infeasible_solution();

  int na = (int)atoms.size();
  std::vector<int> assign(na, 0);
  std::optional<Weight> best;
  std::vector<uint32_t> best_blocks;
  // Restricted-growth enumeration of partitions of the atoms.
  std::function<void(int, int)> enumerate = [&](int i, int used) {
    if (i == na) {
      std::vector<uint32_t> blocks(used, 0);
      for (int j = 0; j < na; ++j) blocks[assign[j]] |= atoms[j];
      Weight total;
      for (uint32_t b : blocks) {
        auto& got = solve_block(b);
        if (!got) return;
        total += got->first;
      }
      if (!best || total < *best) {
        best = total;
        best_blocks = blocks;
      }
      return;
    }
    for (int b = 0; b <= used && b < na; ++b) {
      assign[i] = b;
      enumerate(i + 1, std::max(used, b + 1));
    }
  };
  enumerate(0, 0);

  if (!best) return infeasible_solution();
  std::set<EdgeId> ids;
  for (uint32_t b : best_blocks) {
    auto& got = solve_block(b);
    ids.insert(got->second.begin(), got->second.end());
  }
  Solution s;
  s.edge_ids.assign(ids.begin(), ids.end());
  s.cost = edge_set_cost(ug, s.edge_ids);
  s.feasible = true;
  return s;
}

namespace {

struct AStarNode {
  Weight f;
  long long seq;
  size_t idx;
  std::vector<EdgeId> included;
  Weight cost;
};

struct AStarOrder {
  bool operator()(const AStarNode& a, const AStarNode& b) const {
    // Newest node wins cost ties: the search dives through a plateau of
    // equal bounds instead of sweeping it breadth-first.
    if (a.f != b.f) return b.f < a.f;
    return a.seq < b.seq;
  }
};

}  // namespace

Solution dsn_bounded_tw(const Instance& inst, const OracleBudget& budget,
                        const EdgeFilter& monotone_filter, int vertex_cap) {
  validate_budget(budget);
  inst.validate();
  const SolutionClass& cls = inst.solution_class;
  if (cls.kind != SolutionClass::Kind::TreewidthAtMost &&
      cls.kind != SolutionClass::Kind::PolyTree)
    throw ContractError("dsn_bounded_tw expects a treewidth-bounded solution class");
  const Graph& g = inst.graph;
  if (g.n > vertex_cap) throw CapacityError("vertex count exceeds the solver cap");
  int omega = cls.kind == SolutionClass::Kind::PolyTree ? 1 : cls.omega;

  SearchShared sh;
  sh.g = &g;
  sh.pattern = &inst.pattern;
  sh.cls = &cls;
  sh.rank = tie_break_rank(g);
  sh.order.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) sh.order[sh.rank[e]] = e;
  sh.node_cap = budget.max_edges_enumerated;
  sh.deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.time_cap_ms);

  auto state_of = [&](const AStarNode& node) {
    std::vector<int8_t> state(g.edge_count(), kUndecided);
    for (size_t i = 0; i < node.idx; ++i) state[sh.order[i]] = kExcluded;
    for (EdgeId e : node.included) state[e] = kIncluded;
    return state;
  };
  auto admissible = [&](const AStarNode& node) -> std::optional<Weight> {
    auto state = state_of(node);
    return residual_bound(g, inst.pattern, state);
  };
  auto grows_ok = [&](const std::vector<EdgeId>& ids) {
    if (omega <= 1) {
      if (!is_poly_forest(g, ids)) return false;
    } else {
      Graph u = underlying_simple(g, ids);
      if (u.edge_count() > omega * u.n) return false;
    }
    if (monotone_filter && !monotone_filter(g, ids)) return false;
    return true;
  };

  long long seq = 0;
  std::priority_queue<AStarNode, std::vector<AStarNode>, AStarOrder> open;
  {
    AStarNode root;
    root.idx = 0;
    root.cost = Weight(0);
    root.seq = seq++;
    auto h = admissible(root);
    if (h) {
      root.f = *h;
      open.push(root);
    }
  }

  while (!open.empty()) {
    AStarNode node = open.top();
    open.pop();
    tick(sh);

    std::vector<EdgeId> sorted = node.included;
    std::sort(sorted.begin(), sorted.end());
    if (check_feasible(g, sorted, inst.pattern)) {
      bool fits = omega <= 1 ? is_poly_forest(g, sorted)
                             : treewidth_exact(underlying_simple(g, sorted)) <= omega;
      if (fits && monotone_filter && !monotone_filter(g, sorted)) fits = false;
      if (fits) {
        Solution s;
        s.edge_ids = sorted;
        s.cost = node.cost;
        s.feasible = true;
        return s;
      }
      if (omega > 1 && treewidth_exact(underlying_simple(g, sorted)) > omega)
        continue;  // supersets cannot shrink the treewidth
      if (monotone_filter && !monotone_filter(g, sorted)) continue;
      if (omega <= 1 && !is_poly_forest(g, sorted)) continue;
    }
    if (node.idx >= sh.order.size()) continue;

    EdgeId e = sh.order[node.idx];
    {
      AStarNode inc;
      inc.idx = node.idx + 1;
      inc.included = node.included;
      inc.included.push_back(e);
      inc.cost = node.cost + g.edges[e].weight;
      if (grows_ok(inc.included)) {
        auto h = admissible(inc);
        if (h) {
          inc.f = inc.cost + *h;
          inc.seq = seq++;
          open.push(std::move(inc));
        }
      }
    }
    {
      AStarNode exc;
      exc.idx = node.idx + 1;
      exc.included = node.included;
      exc.cost = node.cost;
      auto h = admissible(exc);
      if (h) {
        exc.f = exc.cost + *h;
        exc.seq = seq++;
        open.push(std::move(exc));
      }
    }
  }
  return infeasible_solution();
}

}  // namespace dsn
