#include "dsn/reach.hpp"

#include <algorithm>
#include <set>

namespace dsn {

std::vector<char> reachable_from(const Graph& g, const std::vector<EdgeId>& ids,
                                 VertexId from) {
  auto adj = subset_out_edges(g, ids);
  std::vector<char> seen(g.n, 0);
  std::vector<VertexId> stack = {from};
  seen[from] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : adj[v]) {
      VertexId to = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
      if (!g.undirected && g.edges[e].tail != v) continue;
      if (!seen[to]) {
        seen[to] = 1;
        stack.push_back(to);
      }
    }
  }
  return seen;
}

bool check_feasible(const Graph& g, const std::vector<EdgeId>& ids, const Pattern& p) {
  auto adj = subset_out_edges(g, ids);
  std::vector<char> seen(g.n, 0);
  std::vector<VertexId> stack;
  VertexId cached_source = -1;
  std::vector<std::pair<VertexId, VertexId>> demands = p.demands;
  std::sort(demands.begin(), demands.end());
  for (auto& [s, t] : demands) {
    if (s != cached_source) {
      std::fill(seen.begin(), seen.end(), 0);
      stack.assign(1, s);
      seen[s] = 1;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : adj[v]) {
          VertexId to = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
          if (!g.undirected && g.edges[e].tail != v) continue;
          if (!seen[to]) {
            seen[to] = 1;
            stack.push_back(to);
          }
        }
      }
      cached_source = s;
    }
    if (!seen[t]) return false;
  }
  return true;
}

namespace {

// Iterative Tarjan over the restricted subgraph.
struct TarjanState {
  const Graph& g;
  const std::vector<std::vector<EdgeId>>& adj;
  std::vector<int> index, lowlink, comp;
  std::vector<char> on_stack;
  std::vector<VertexId> stack;
  int next_index = 0, next_comp = 0;

  TarjanState(const Graph& g, const std::vector<std::vector<EdgeId>>& adj)
      : g(g), adj(adj), index(g.n, -1), lowlink(g.n, 0), comp(g.n, -1),
        on_stack(g.n, 0) {}

  void run(VertexId root) {
    struct Frame {
      VertexId v;
      size_t next_edge;
    };
    std::vector<Frame> frames = {{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_edge < adj[f.v].size()) {
        EdgeId e = adj[f.v][f.next_edge++];
        if (g.edges[e].tail != f.v) continue;
        VertexId w = g.edges[e].head;
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        VertexId v = f.v;
        if (lowlink[v] == index[v]) {
          while (true) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          next_comp++;
        }
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      }
    }
  }
};

}  // namespace

Condensation scc_condensation(const Graph& g, const std::vector<EdgeId>& ids) {
  auto adj = subset_out_edges(g, ids);
  TarjanState ts(g, adj);
  for (VertexId v = 0; v < g.n; ++v)
    if (ts.index[v] == -1) ts.run(v);
  // Tarjan numbers components in reverse topological order; flip so that
  // every dag edge goes from a lower to a higher component id.
  Condensation c;
  c.comp.resize(g.n);
  for (VertexId v = 0; v < g.n; ++v) c.comp[v] = ts.next_comp - 1 - ts.comp[v];
  c.dag.n = ts.next_comp;
  c.dag.labels.assign(ts.next_comp, std::string());
  std::set<std::pair<int, int>> seen;
  for (EdgeId e : ids) {
    int a = c.comp[g.edges[e].tail], b = c.comp[g.edges[e].head];
    if (a != b && seen.insert({a, b}).second) c.dag.add_edge(a, b, Weight(0));
  }
  return c;
}

Condensation scc_condensation(const Graph& g) {
  std::vector<EdgeId> all(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
  return scc_condensation(g, all);
}

BiconnectedSplit biconnected_components(const Graph& ug, const std::vector<EdgeId>& ids) {
  int n = ug.n;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e : ids) {
    adj[ug.edges[e].tail].push_back({ug.edges[e].head, e});
    adj[ug.edges[e].head].push_back({ug.edges[e].tail, e});
  }
  BiconnectedSplit out;
  out.is_articulation.assign(n, 0);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  int timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    EdgeId parent_edge;
    size_t next;
    int children = 0;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1 || adj[root].empty()) continue;
    std::vector<Frame> frames = {{root, -1, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, e, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = frames.back();
        frames.pop_back();
        if (frames.empty()) continue;
        Frame& p = frames.back();
        p.children++;
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] >= disc[p.v]) {
          // p.v separates the subtree at done.v; pop one component.
          if (p.parent != -1 || p.children > 1 || p.next < adj[p.v].size())
            out.is_articulation[p.v] = 1;
          std::vector<EdgeId> comp;
          while (!edge_stack.empty()) {
            EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == done.parent_edge) break;
          }
          std::sort(comp.begin(), comp.end());
          out.components.push_back(std::move(comp));
        }
      }
    }
  }
  // Root articulation detection above is conservative while the root's scan
  // is unfinished; recompute it exactly: a root is an articulation point iff
  // it has two or more DFS children, which equals appearing in two or more
  // components here.
  std::vector<int> seen_in(n, 0);
  std::fill(out.is_articulation.begin(), out.is_articulation.end(), 0);
  for (auto& comp : out.components) {
    std::vector<VertexId> verts;
    for (EdgeId e : comp) {
      verts.push_back(ug.edges[e].tail);
      verts.push_back(ug.edges[e].head);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (VertexId v : verts)
      if (++seen_in[v] >= 2) out.is_articulation[v] = 1;
  }
  return out;
}

std::vector<int> weak_components(const Graph& g, const std::vector<EdgeId>& ids) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<VertexId>> adj(g.n);
  for (EdgeId e : ids) {
    adj[g.edges[e].tail].push_back(g.edges[e].head);
    adj[g.edges[e].head].push_back(g.edges[e].tail);
  }
  int c = 0;
  for (VertexId s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    std::vector<VertexId> stack = {s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v])
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    c++;
  }
  return comp;
}

}  // namespace dsn
