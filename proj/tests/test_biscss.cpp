#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "dsn/biscss.hpp"
#include "dsn/errors.hpp"
#include "dsn/exact.hpp"
#include "dsn/graph.hpp"
#include "dsn/reach.hpp"
#include "dsn/rng.hpp"
#include "oracles.hpp"

using namespace dsn;

namespace {

Graph bidirected(int n, const std::vector<std::tuple<int, int, int>>& units) {
  Graph g;
  g.n = n;
  for (auto& [a, b, w] : units) {
    g.add_edge(a, b, Weight(w));
    g.add_edge(b, a, Weight(w));
  }
  return g;
}

EdgeId arc(const Graph& g, int a, int b) {
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i].tail == a && g.edges[i].head == b) return (EdgeId)i;
  REQUIRE(false);
  return -1;
}

// Bidirected cycle 0-1-...-n-1-0 with unit weights.
Graph ring(int n) {
  std::vector<std::tuple<int, int, int>> units;
  for (int i = 0; i < n; ++i) units.push_back({i, (i + 1) % n, 1});
  return bidirected(n, units);
}

std::vector<VertexId> iota_terminals(int n) {
  std::vector<VertexId> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

// Every vertex of every part that is not a terminal keeps an incoming and
// an outgoing arc, so maximal directed paths can only stop at terminals.
void check_paths_end_at_terminals(const Graph& g, const PolyTreePart& part) {
  std::set<VertexId> terms(part.pattern.terminals.begin(), part.pattern.terminals.end());
  std::map<VertexId, std::pair<int, int>> deg;
  for (EdgeId e : part.tree.edge_ids) {
    deg[g.edges[e].tail].second++;
    deg[g.edges[e].head].first++;
  }
  for (auto& [v, io] : deg) {
    if (terms.count(v)) continue;
    CHECK(io.first >= 1);
    CHECK(io.second >= 1);
  }
}

void check_partition(const Graph& g, const Solution& opt,
                     const std::vector<PolyTreePart>& parts) {
  std::vector<EdgeId> all;
  Weight total;
  for (const auto& part : parts) {
    REQUIRE(!part.tree.edge_ids.empty());
    CHECK(part.tree.feasible);
    CHECK(solution_in_class(g, part.tree.edge_ids, SolutionClass::poly_tree(),
                            part.pattern.terminals));
    CHECK(check_feasible(g, part.tree.edge_ids, part.pattern));
    CHECK(part.pattern.terminals.size() >= 2);
    check_paths_end_at_terminals(g, part);
    all.insert(all.end(), part.tree.edge_ids.begin(), part.tree.edge_ids.end());
    total += part.tree.cost;
  }
  std::vector<EdgeId> sorted_all = all;
  std::sort(sorted_all.begin(), sorted_all.end());
  CHECK(sorted_all.size() == std::set<EdgeId>(all.begin(), all.end()).size());
  std::vector<EdgeId> want = opt.edge_ids;
  std::sort(want.begin(), want.end());
  CHECK(sorted_all == want);
  CHECK(total == opt.cost);
}

}  // namespace

TEST_CASE("fpt: single edge pays for both directions") {
  Graph g = bidirected(2, {{0, 1, 1}});
  Solution s = biscss_fpt(g, {0, 1});
  REQUIRE(s.feasible);
  CHECK(s.cost == Weight(2));
  CHECK(s.edge_ids == std::vector<EdgeId>{0, 1});
}

TEST_CASE("fpt: triangle closes into a directed cycle") {
  Graph g = bidirected(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  std::vector<VertexId> R = {0, 1, 2};
  Solution s = biscss_fpt(g, R);
  REQUIRE(s.feasible);
  CHECK(s.cost == Weight(3));
  CHECK(check_feasible(g, s.edge_ids, Pattern::all_pairs(R)));
  auto opt = test::oracle_min_cost(g, Pattern::all_pairs(R));
  REQUIRE(opt.has_value());
  CHECK(s.cost == opt->cost);
}

TEST_CASE("fpt: rings beat doubled spanning trees") {
  for (int n : {4, 5, 6}) {
    CAPTURE(n);
    Graph g = ring(n);
    Solution s = biscss_fpt(g, iota_terminals(n));
    REQUIRE(s.feasible);
    CHECK(s.cost == Weight(n));
    CHECK(Weight(n) < Weight(2 * (n - 1)));
    CHECK((int)s.edge_ids.size() == n);
    CHECK(check_feasible(g, s.edge_ids, Pattern::all_pairs(iota_terminals(n))));
  }
}

TEST_CASE("fpt: trivial terminal sets need no edges") {
  Graph g = bidirected(3, {{0, 1, 2}, {1, 2, 5}});
  for (auto R : {std::vector<VertexId>{}, std::vector<VertexId>{2}}) {
    Solution s = biscss_fpt(g, R);
    CHECK(s.feasible);
    CHECK(s.cost == Weight(0));
    CHECK(s.edge_ids.empty());
  }
}

TEST_CASE("fpt: split graphs have no network") {
  Graph g = bidirected(4, {{0, 1, 1}, {2, 3, 1}});
  for (int cap : {4, 1}) {
    Solution s = biscss_fpt(g, {0, 2}, {}, cap);
    CHECK(!s.feasible);
    CHECK(s.edge_ids.empty());
  }
}

TEST_CASE("fpt: input contract") {
  Graph one_way;
  one_way.n = 2;
  one_way.add_edge(0, 1, Weight(1));
  CHECK_THROWS_WITH_AS(biscss_fpt(one_way, {0, 1}), "biscss_fpt expects a bidirected graph",
                       ContractError);
  Graph g = bidirected(2, {{0, 1, 1}});
  CHECK_THROWS_WITH_AS(biscss_fpt(g, {0, 5}), "terminal out of range", ContractError);
  CHECK_THROWS_WITH_AS(biscss_fpt(g, {0, 1}, {}, 0),
                       "full enumeration cap must be positive", ContractError);
  OracleBudget tiny;
  tiny.max_edges_enumerated = 1;
  Graph tri = bidirected(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK_THROWS_AS(biscss_fpt(tri, {0, 1, 2}, tiny), CapacityError);
}

TEST_CASE("fpt: matches the oracle on random bidirected graphs") {
  Rng rng(52401);
  int solved = 0;
  for (int iter = 0; iter < 40; ++iter) {
    int n = 3 + (int)rng.range(0, 3);
    int m = n - 1 + (int)rng.range(0, 2);
    std::vector<std::tuple<int, int, int>> units;
    for (int i = 0; i < m; ++i) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b) continue;
      units.push_back({std::min(a, b), std::max(a, b), (int)rng.range(1, 4)});
    }
    if (units.empty()) continue;
    Graph g = bidirected(n, units);
    int k = 2 + (int)(rng.range(0, 2) == 0 ? 1 : 0);
    std::set<VertexId> rset;
    while ((int)rset.size() < k) rset.insert((VertexId)rng.range(0, n - 1));
    std::vector<VertexId> R(rset.begin(), rset.end());

    Solution got = biscss_fpt(g, R);
    auto opt = test::oracle_min_cost(g, Pattern::all_pairs(R));
    REQUIRE(got.feasible == opt.has_value());
    if (!opt) continue;
    ++solved;
    CHECK(got.cost == opt->cost);
    CHECK(check_feasible(g, got.edge_ids, Pattern::all_pairs(R)));

    Solution pruned = biscss_fpt(g, R, {}, 1);
    REQUIRE(pruned.feasible);
    CHECK(pruned.cost == opt->cost);
  }
  CHECK(solved >= 25);
}

TEST_CASE("fpt: four terminals stay exact") {
  Rng rng(90817);
  int solved = 0;
  for (int iter = 0; iter < 6; ++iter) {
    int n = 4 + (int)rng.range(0, 1);
    std::vector<std::tuple<int, int, int>> units;
    int m = n + (int)rng.range(0, 1);
    for (int i = 0; i < m; ++i) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b) continue;
      units.push_back({std::min(a, b), std::max(a, b), (int)rng.range(1, 3)});
    }
    if (units.size() < 3) continue;
    Graph g = bidirected(n, units);
    std::set<VertexId> rset;
    while ((int)rset.size() < 4) rset.insert((VertexId)rng.range(0, n - 1));
    std::vector<VertexId> R(rset.begin(), rset.end());

    Solution got = biscss_fpt(g, R);
    auto opt = test::oracle_min_cost(g, Pattern::all_pairs(R));
    REQUIRE(got.feasible == opt.has_value());
    if (!opt) continue;
    ++solved;
    CHECK(got.cost == opt->cost);
  }
  CHECK(solved >= 2);
}

TEST_CASE("decompose: directed terminal ring splits into single arcs") {
  Graph g = ring(4);
  std::vector<EdgeId> cycle = {arc(g, 0, 1), arc(g, 1, 2), arc(g, 2, 3), arc(g, 3, 0)};
  Solution N = make_solution(g, cycle, Pattern::all_pairs(iota_terminals(4)));
  REQUIRE(N.feasible);

  auto parts = polytree_decompose(g, N, iota_terminals(4));
  REQUIRE(parts.size() == 4);
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    CHECK(parts[i].tree.edge_ids == std::vector<EdgeId>{arc(g, i, j)});
    CHECK(parts[i].tree.cost == Weight(1));
    CHECK(parts[i].pattern.terminals == std::vector<VertexId>{std::min(i, j), std::max(i, j)});
    CHECK(parts[i].pattern.demands ==
          std::vector<std::pair<VertexId, VertexId>>{{i, j}});
  }
  check_partition(g, N, parts);
}

TEST_CASE("decompose: edge pair gives one tree per direction") {
  Graph g = bidirected(2, {{0, 1, 3}});
  Solution N = make_solution(g, {0, 1}, Pattern::all_pairs({0, 1}));
  auto parts = polytree_decompose(g, N, {0, 1});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].tree.edge_ids == std::vector<EdgeId>{arc(g, 0, 1)});
  CHECK(parts[0].pattern.demands ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
  CHECK(parts[1].tree.edge_ids == std::vector<EdgeId>{arc(g, 1, 0)});
  CHECK(parts[1].pattern.demands ==
        std::vector<std::pair<VertexId, VertexId>>{{1, 0}});
  check_partition(g, N, parts);
}

TEST_CASE("decompose: steiner chain keeps one arborescence per direction") {
  Graph g = bidirected(3, {{0, 1, 1}, {1, 2, 1}});
  Solution N = make_solution(g, {0, 1, 2, 3}, Pattern::all_pairs({0, 2}));
  REQUIRE(N.feasible);
  auto parts = polytree_decompose(g, N, {0, 2});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].tree.edge_ids == std::vector<EdgeId>{arc(g, 0, 1), arc(g, 1, 2)});
  CHECK(parts[0].pattern.demands ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 2}});
  CHECK(parts[1].tree.edge_ids == std::vector<EdgeId>{arc(g, 1, 0), arc(g, 2, 1)});
  CHECK(parts[1].pattern.demands ==
        std::vector<std::pair<VertexId, VertexId>>{{2, 0}});
  check_partition(g, N, parts);
}

TEST_CASE("decompose: cut vertices splice pendant bridges into the ring classes") {
  // Steiner ring 0-1-2 with one pendant terminal per ring vertex; the
  // optimum is the directed ring plus all pendant pairs, and it splits into
  // three terminal-to-terminal paths through the cut vertices.
  Graph g = bidirected(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}, {2, 5, 1}});
  std::vector<VertexId> R = {3, 4, 5};
  std::vector<EdgeId> ids = {arc(g, 0, 1), arc(g, 1, 2), arc(g, 2, 0),
                             arc(g, 0, 3), arc(g, 3, 0), arc(g, 1, 4),
                             arc(g, 4, 1), arc(g, 2, 5), arc(g, 5, 2)};
  Solution N = make_solution(g, ids, Pattern::all_pairs(R));
  REQUIRE(N.feasible);
  REQUIRE(N.cost == Weight(9));
  auto opt = test::oracle_min_cost(g, Pattern::all_pairs(R));
  REQUIRE(opt.has_value());
  REQUIRE(opt->cost == Weight(9));

  auto parts = polytree_decompose(g, N, R);
  REQUIRE(parts.size() == 3);
  std::vector<std::vector<EdgeId>> want = {
      {arc(g, 3, 0), arc(g, 0, 1), arc(g, 1, 4)},
      {arc(g, 4, 1), arc(g, 1, 2), arc(g, 2, 5)},
      {arc(g, 5, 2), arc(g, 2, 0), arc(g, 0, 3)},
  };
  std::vector<std::vector<std::pair<VertexId, VertexId>>> want_demands = {
      {{3, 4}}, {{4, 5}}, {{5, 3}}};
  for (int i = 0; i < 3; ++i) {
    std::sort(want[i].begin(), want[i].end());
    CHECK(parts[i].tree.edge_ids == want[i]);
    CHECK(parts[i].pattern.demands == want_demands[i]);
  }
  check_partition(g, N, parts);
}

TEST_CASE("decompose: solver optima split cleanly") {
  Rng rng(61833);
  int decomposed = 0;
  for (int iter = 0; iter < 50; ++iter) {
    int n = 3 + (int)rng.range(0, 3);
    int m = n - 1 + (int)rng.range(0, 2);
    std::vector<std::tuple<int, int, int>> units;
    for (int i = 0; i < m; ++i) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b) continue;
      units.push_back({std::min(a, b), std::max(a, b), (int)rng.range(1, 4)});
    }
    if (units.empty()) continue;
    Graph g = bidirected(n, units);
    int k = 2 + (int)rng.range(0, 1);
    std::set<VertexId> rset;
    while ((int)rset.size() < k) rset.insert((VertexId)rng.range(0, n - 1));
    std::vector<VertexId> R(rset.begin(), rset.end());

    Solution N = biscss_fpt(g, R);
    if (!N.feasible) continue;
    try {
      auto parts = polytree_decompose(g, N, R);
      ++decomposed;
      REQUIRE(!parts.empty());
      check_partition(g, N, parts);
    } catch (const ContractError&) {
      // optima that are not degree-reduced may fall outside the
      // decomposable shape; they must be rejected, not mangled
    }
  }
  CHECK(decomposed >= 15);
}

TEST_CASE("decompose: shape violations are named") {
  Graph one_way;
  one_way.n = 2;
  one_way.add_edge(0, 1, Weight(1));
  Solution N1;
  N1.edge_ids = {0};
  CHECK_THROWS_WITH_AS(polytree_decompose(one_way, N1, {0, 1}),
                       "polytree_decompose expects a bidirected graph", ContractError);

  Graph pair = bidirected(2, {{0, 1, 1}});
  Solution bad;
  bad.edge_ids = {99};
  CHECK_THROWS_WITH_AS(polytree_decompose(pair, bad, {0, 1}), "edge id out of range",
                       ContractError);

  Solution half;
  half.edge_ids = {arc(pair, 0, 1)};
  CHECK_THROWS_WITH_AS(polytree_decompose(pair, half, {0, 1}),
                       "network is not strongly connected", ContractError);

  Graph spare = bidirected(3, {{0, 1, 1}});
  Solution both;
  both.edge_ids = {0, 1};
  CHECK_THROWS_WITH_AS(polytree_decompose(spare, both, {0, 2}),
                       "network misses a terminal", ContractError);

  Graph pendant = bidirected(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}});
  std::vector<EdgeId> loop_ids = {arc(pendant, 0, 1), arc(pendant, 1, 2),
                                  arc(pendant, 2, 0), arc(pendant, 0, 3),
                                  arc(pendant, 3, 0)};
  Solution dangling;
  dangling.edge_ids = loop_ids;
  CHECK_THROWS_WITH_AS(polytree_decompose(pendant, dangling, {0, 1, 2}),
                       "network has a steiner leaf", ContractError);

  Graph tri = bidirected(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  Solution full;
  full.edge_ids = {0, 1, 2, 3, 4, 5};
  CHECK_THROWS_WITH_AS(polytree_decompose(tri, full, {0, 1, 2}),
                       "reverse pair inside a two-connected component", ContractError);

  Graph lasso = bidirected(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}});
  std::vector<EdgeId> lasso_ids = {arc(lasso, 0, 1), arc(lasso, 1, 2), arc(lasso, 2, 0),
                                   arc(lasso, 0, 3), arc(lasso, 3, 0), arc(lasso, 3, 4),
                                   arc(lasso, 4, 3)};
  Solution lasso_n;
  lasso_n.edge_ids = lasso_ids;
  CHECK_THROWS_WITH_AS(polytree_decompose(lasso, lasso_n, {4}),
                       "a cycle avoids the terminals and cut vertices", ContractError);
}

TEST_CASE("decompose: rings of terminals split into n poly-paths") {
  for (int n : {5, 6}) {
    CAPTURE(n);
    Graph g = ring(n);
    std::vector<EdgeId> cycle;
    for (int i = 0; i < n; ++i) cycle.push_back(arc(g, i, (i + 1) % n));
    Solution N = make_solution(g, cycle, Pattern::all_pairs(iota_terminals(n)));
    auto parts = polytree_decompose(g, N, iota_terminals(n));
    REQUIRE((int)parts.size() == n);
    for (auto& part : parts) CHECK(part.tree.edge_ids.size() == 1);
    check_partition(g, N, parts);
  }
}
