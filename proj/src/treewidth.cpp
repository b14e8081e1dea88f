#include "dsn/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "dsn/errors.hpp"

namespace dsn {

namespace {

std::vector<uint32_t> adjacency_masks(const Graph& ug) {
  std::vector<uint32_t> adj(ug.n, 0);
  for (const Edge& e : ug.edges) {
    if (e.tail == e.head) continue;
    adj[e.tail] |= 1u << e.head;
    adj[e.head] |= 1u << e.tail;
  }
  return adj;
}

// Number of vertices outside T u {v} adjacent to the component of v in the
// graph induced by T u {v}. This is the clique size v would close over if
// eliminated right after the set T.
int elimination_degree(const std::vector<uint32_t>& adj, uint32_t T, int v) {
  uint32_t comp = 1u << v;
  uint32_t nb = adj[v];
  while (true) {
    uint32_t grow = nb & T & ~comp;
    if (!grow) break;
    comp |= grow;
    uint32_t g = grow;
    while (g) {
      int u = std::countr_zero(g);
      g &= g - 1;
      nb |= adj[u];
    }
  }
  return std::popcount(nb & ~T & ~(1u << v));
}

std::vector<int8_t> run_subset_dp(const std::vector<uint32_t>& adj, int n) {
  std::vector<int8_t> f((size_t)1 << n, 0);
  f[0] = -1;
  for (uint32_t S = 1; S < (1u << n); ++S) {
    int best = 127;
    uint32_t it = S;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      uint32_t T = S & ~(1u << v);
      int cand = std::max((int)f[T], elimination_degree(adj, T, v));
      best = std::min(best, cand);
    }
    f[S] = (int8_t)best;
  }
  return f;
}

}  // namespace

int treewidth_exact(const Graph& ug, int vertex_cap) {
  if (ug.n > vertex_cap || ug.n > 31)
    throw CapacityError("treewidth_exact: " + std::to_string(ug.n) +
                        " vertices exceeds cap " + std::to_string(std::min(vertex_cap, 31)));
  if (ug.n == 0) return -1;
  auto adj = adjacency_masks(ug);
  auto f = run_subset_dp(adj, ug.n);
  return f[(1u << ug.n) - 1];
}

TreeDecomposition treewidth_decomposition(const Graph& ug, int vertex_cap) {
  if (ug.n > vertex_cap || ug.n > 31)
    throw CapacityError("treewidth_decomposition: vertex count exceeds cap");
  TreeDecomposition td;
  if (ug.n == 0) {
    td.width = -1;
    return td;
  }
  int n = ug.n;
  auto adj = adjacency_masks(ug);
  auto f = run_subset_dp(adj, n);

  // Recover an elimination order achieving f[full], eliminating from the
  // full set backwards: position n-1-i in the order is filled at step i.
  std::vector<int> order;
  uint32_t S = (1u << n) - 1;
  while (S) {
    int pick = -1;
    uint32_t it = S;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      uint32_t T = S & ~(1u << v);
      if (std::max((int)f[T], elimination_degree(adj, T, v)) == f[S]) {
        pick = v;
        break;
      }
    }
    order.push_back(pick);
    S &= ~(1u << pick);
  }
  std::reverse(order.begin(), order.end());

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // Fill-in construction along the elimination order; one bag per vertex.
  std::vector<uint32_t> fill = adj;
  td.bags.assign(n, {});
  std::vector<int> bag_of(n);
  for (int i = 0; i < n; ++i) bag_of[order[i]] = order[i];
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    uint32_t later = 0;
    uint32_t nb = fill[v];
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (pos[u] > i) later |= 1u << u;
    }
    td.bags[v].push_back(v);
    int parent = -1;
    uint32_t it = later;
    while (it) {
      int u = std::countr_zero(it);
      it &= it - 1;
      td.bags[v].push_back(u);
      fill[u] |= later & ~(1u << u);
      if (parent == -1 || pos[u] < pos[parent]) parent = u;
    }
    std::sort(td.bags[v].begin(), td.bags[v].end());
    if (parent != -1)
      td.tree_edges.emplace_back(v, parent);
    else
      roots.push_back(v);
  }
  for (size_t i = 1; i < roots.size(); ++i)
    td.tree_edges.emplace_back(roots[i - 1], roots[i]);

  int width = 0;
  for (auto& bag : td.bags) width = std::max(width, (int)bag.size() - 1);
  td.width = width;
  return td;
}

bool valid_tree_decomposition(const Graph& ug, const TreeDecomposition& td) {
  int b = (int)td.bags.size();
  if (ug.n == 0) return td.bags.empty();
  if ((int)td.tree_edges.size() != b - 1) return false;
  std::vector<int> uf(b);
  for (int i = 0; i < b; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto& [a, c] : td.tree_edges) {
    if (a < 0 || a >= b || c < 0 || c >= b) return false;
    int ra = find(a), rc = find(c);
    if (ra == rc) return false;  // cycle
    uf[ra] = rc;
  }

  std::vector<char> seen(ug.n, 0);
  for (auto& bag : td.bags)
    for (int v : bag) {
      if (v < 0 || v >= ug.n) return false;
      seen[v] = 1;
    }
  for (int v = 0; v < ug.n; ++v)
    if (!seen[v]) return false;

  auto in_bag = [&](int bag, int v) {
    return std::binary_search(td.bags[bag].begin(), td.bags[bag].end(), v);
  };
  for (const Edge& e : ug.edges) {
    bool covered = false;
    for (int i = 0; i < b && !covered; ++i)
      covered = in_bag(i, e.tail) && in_bag(i, e.head);
    if (!covered) return false;
  }

  // Connectivity of the bags containing each vertex.
  std::vector<std::vector<int>> tree_adj(b);
  for (auto& [a, c] : td.tree_edges) {
    tree_adj[a].push_back(c);
    tree_adj[c].push_back(a);
  }
  for (int v = 0; v < ug.n; ++v) {
    int start = -1, count = 0;
    for (int i = 0; i < b; ++i)
      if (in_bag(i, v)) {
        count++;
        start = i;
      }
    if (count == 0) return false;
    std::vector<int> stack = {start};
    std::vector<char> vis(b, 0);
    vis[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tree_adj[x])
        if (!vis[y] && in_bag(y, v)) {
          vis[y] = 1;
          reached++;
          stack.push_back(y);
        }
    }
    if (reached != count) return false;
  }
  return true;
}

}  // namespace dsn
