#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dsn/approx.hpp"
#include "dsn/errors.hpp"
#include "dsn/exact.hpp"
#include "dsn/graph.hpp"
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

Graph undirected(int n, const std::vector<std::tuple<int, int, int>>& units) {
  Graph g;
  g.n = n;
  g.undirected = true;
  for (auto& [a, b, w] : units) g.add_edge(a, b, Weight(w));
  return g;
}

Instance make_instance(Graph g, std::vector<std::pair<VertexId, VertexId>> demands) {
  Instance inst;
  inst.graph = std::move(g);
  std::set<VertexId> tset;
  for (auto& [s, t] : demands) {
    tset.insert(s);
    tset.insert(t);
  }
  inst.pattern.terminals.assign(tset.begin(), tset.end());
  inst.pattern.demands = std::move(demands);
  inst.pattern.normalize();
  return inst;
}

std::vector<std::pair<VertexId, VertexId>> random_pairs(Rng& rng, int n, int count) {
  std::set<std::pair<VertexId, VertexId>> ds;
  int guard = 0;
  while ((int)ds.size() < count && guard++ < 50) {
    int s = (int)rng.range(0, n - 1), t = (int)rng.range(0, n - 1);
    if (s != t) ds.insert({s, t});
  }
  return {ds.begin(), ds.end()};
}

Pattern strong_pattern(const std::vector<VertexId>& R) {
  Pattern p;
  p.terminals = R;
  for (VertexId a : R)
    for (VertexId b : R)
      if (a != b) p.demands.emplace_back(a, b);
  p.normalize();
  return p;
}

}  // namespace

TEST_CASE("steiner forest approx: single edge and path") {
  Graph g = undirected(2, {{0, 1, 1}});
  Solution s = steiner_forest_2approx(g, {{0, 1}});
  CHECK(s.feasible);
  CHECK(s.edge_ids == std::vector<EdgeId>{0});
  CHECK(s.cost == Weight(1));

  Graph path = undirected(3, {{0, 1, 1}, {1, 2, 1}});
  Solution p = steiner_forest_2approx(path, {{0, 2}});
  CHECK(p.feasible);
  CHECK(p.cost == Weight(2));
  CHECK(p.edge_ids.size() == 2);
}

TEST_CASE("steiner forest approx: reverse delete removes slack purchases") {
  // A triangle where moat growth buys the two cheap sides before the pairs
  // are joined; the reverse delete phase must keep the result a forest.
  Graph g = undirected(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 3}});
  Solution s = steiner_forest_2approx(g, {{0, 2}});
  CHECK(s.feasible);
  CHECK(s.cost <= Weight(4));
  Solution opt = steiner_forest_fpt(g, {{0, 2}});
  CHECK(s.cost <= Weight(2) * opt.cost);
}

TEST_CASE("steiner forest approx: disconnected pair reports infeasible") {
  Graph g = undirected(4, {{0, 1, 1}, {2, 3, 1}});
  Solution s = steiner_forest_2approx(g, {{0, 2}});
  CHECK_FALSE(s.feasible);
  CHECK_THROWS_AS((void)steiner_forest_2approx(g, {{0, 9}}), ContractError);
}

TEST_CASE("steiner forest approx: ratio bound against the exact solver") {
  Rng rng(9201);
  int solved = 0;
  for (int iter = 0; iter < 120; ++iter) {
    int n = 3 + (int)rng.range(0, 3);
    int m = 2 + (int)rng.range(0, 5);
    std::vector<std::tuple<int, int, int>> units;
    std::set<std::pair<int, int>> used;
    int guard = 0;
    while ((int)units.size() < m && guard++ < 200) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b) continue;
      if (!used.insert({std::min(a, b), std::max(a, b)}).second) continue;
      units.push_back({std::min(a, b), std::max(a, b), (int)rng.range(1, 4)});
    }
    Graph g = undirected(n, units);
    auto pairs = random_pairs(rng, n, 1 + (int)rng.range(0, 2));
    std::set<std::pair<VertexId, VertexId>> dedup;
    std::vector<std::pair<VertexId, VertexId>> norm;
    for (auto [a, b] : pairs) {
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      if (dedup.insert(key).second) norm.push_back(key);
    }
    Solution approx = steiner_forest_2approx(g, norm);
    Solution exact = steiner_forest_fpt(g, norm);
    REQUIRE(approx.feasible == exact.feasible);
    if (!exact.feasible) continue;
    ++solved;
    CHECK(approx.cost <= Weight(2) * exact.cost);
    CHECK(exact.cost <= approx.cost);
    // The output must stay a forest after reverse delete.
    CHECK((int)approx.edge_ids.size() < n);
  }
  CHECK(solved >= 40);
}

TEST_CASE("bidirected approx: doubled unit edge and path") {
  // One demand over a bidirected unit edge: the forest is that edge and both
  // directions come back, so the cost is 2 against an optimum of 1.
  Instance one = make_instance(bidirected(2, {{0, 1, 1}}), {{0, 1}});
  Solution s4 = bidsn_4approx(one);
  CHECK(s4.feasible);
  CHECK(s4.edge_ids.size() == 2);
  CHECK(s4.cost == Weight(2));
  Solution s2 = bidsn_2approx_fpt(one);
  CHECK(s2.feasible);
  CHECK(s2.cost == Weight(2));

  Instance path = make_instance(bidirected(3, {{0, 1, 1}, {1, 2, 1}}), {{0, 2}});
  CHECK(bidsn_4approx(path).cost == Weight(4));
  CHECK(bidsn_2approx_fpt(path).cost == Weight(4));
}

TEST_CASE("bidirected approx: symmetric demands keep both directions") {
  Instance inst = make_instance(bidirected(2, {{0, 1, 3}}), {{0, 1}, {1, 0}});
  Solution s = bidsn_4approx(inst);
  CHECK(s.feasible);
  CHECK(s.edge_ids.size() == 2);
  CHECK(s.cost == Weight(6));
}

TEST_CASE("bidirected approx: rejects directed input and reports infeasible") {
  Graph g;
  g.n = 2;
  g.add_edge(0, 1, Weight(1));
  Instance bad = make_instance(std::move(g), {{0, 1}});
  CHECK_THROWS_AS((void)bidsn_4approx(bad), ContractError);
  CHECK_THROWS_AS((void)bidsn_2approx_fpt(bad), ContractError);

  Instance split = make_instance(bidirected(4, {{0, 1, 1}, {2, 3, 1}}), {{0, 3}});
  CHECK_FALSE(bidsn_4approx(split).feasible);
  CHECK_FALSE(bidsn_2approx_fpt(split).feasible);
}

TEST_CASE("bidirected approx: ratio bounds over random instances") {
  Rng rng(6021);
  int solved = 0;
  for (int iter = 0; iter < 100; ++iter) {
    int n = 3 + (int)rng.range(0, 2);
    int m = 2 + (int)rng.range(0, 3);
    std::vector<std::tuple<int, int, int>> units;
    std::set<std::pair<int, int>> used;
    int guard = 0;
    while ((int)units.size() < m && guard++ < 200) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b) continue;
      if (!used.insert({std::min(a, b), std::max(a, b)}).second) continue;
      units.push_back({std::min(a, b), std::max(a, b), (int)rng.range(1, 4)});
    }
    Instance inst = make_instance(bidirected(n, units),
                                  random_pairs(rng, n, 1 + (int)rng.range(0, 2)));
    auto opt = test::oracle_min_cost(inst.graph, inst.pattern);
    Solution four = bidsn_4approx(inst);
    Solution two = bidsn_2approx_fpt(inst);
    REQUIRE(four.feasible == opt.has_value());
    REQUIRE(two.feasible == opt.has_value());
    if (!opt) continue;
    ++solved;
    CHECK(test::oracle_feasible(inst.graph, four.edge_ids, inst.pattern));
    CHECK(test::oracle_feasible(inst.graph, two.edge_ids, inst.pattern));
    CHECK(four.cost <= Weight(4) * opt->cost);
    CHECK(two.cost <= Weight(2) * opt->cost);
    CHECK(opt->cost <= two.cost);
    CHECK(two.cost <= four.cost);
  }
  CHECK(solved >= 40);
}

TEST_CASE("strong connector approx: cycle and star") {
  Graph tri;
  tri.n = 3;
  tri.add_edge(0, 1, Weight(1));
  tri.add_edge(1, 2, Weight(1));
  tri.add_edge(2, 0, Weight(1));
  Solution s = scss_2approx(tri, {0, 1, 2});
  CHECK(s.feasible);
  CHECK(s.cost == Weight(3));
  CHECK(s.edge_ids == std::vector<EdgeId>{0, 1, 2});

  Graph star = bidirected(4, {{3, 0, 1}, {3, 1, 1}, {3, 2, 1}});
  Solution t = scss_2approx(star, {0, 1, 2});
  CHECK(t.feasible);
  CHECK(t.cost == Weight(6));
  CHECK(t.edge_ids.size() == 6);
}

TEST_CASE("strong connector approx: trivial terminal sets and errors") {
  Graph g = bidirected(3, {{0, 1, 1}});
  Solution one = scss_2approx(g, {2});
  CHECK(one.feasible);
  CHECK(one.edge_ids.empty());
  CHECK(one.cost == Weight(0));
  CHECK_THROWS_AS((void)scss_2approx(g, {0, 7}), ContractError);

  Graph split = bidirected(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_FALSE(scss_2approx(split, {0, 2}).feasible);
}

TEST_CASE("strong connector approx: cheap tour beats doubled tree") {
  // Complete bidirected graph where one Hamiltonian cycle is cheap; the tour
  // costs 5 and the approximation may pay at most twice that.
  Graph g;
  g.n = 5;
  auto on_cycle = [](int a, int b) {
    int d = (a - b + 5) % 5;
    return d == 1 || d == 4;
  };
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) g.add_edge(a, b, Weight(on_cycle(a, b) ? 1 : 2));
  std::vector<VertexId> R = {0, 1, 2, 3, 4};
  Solution s = scss_2approx(g, R);
  CHECK(s.feasible);
  CHECK(test::oracle_feasible(g, s.edge_ids, strong_pattern(R)));
  CHECK(Weight(5) <= s.cost);
  CHECK(s.cost <= Weight(10));
}

TEST_CASE("strong connector approx: ratio bound over random digraphs") {
  Rng rng(31033);
  int solved = 0;
  for (int iter = 0; iter < 140; ++iter) {
    int n = 3 + (int)rng.range(0, 2);
    Graph g;
    g.n = n;
    std::set<std::pair<int, int>> used;
    int m = 3 + (int)rng.range(0, 5);
    int guard = 0;
    while ((int)g.edges.size() < m && guard++ < 200) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b || !used.insert({a, b}).second) continue;
      g.add_edge(a, b, Weight((long long)rng.range(1, 3)));
    }
    int k = 2 + (int)rng.range(0, n - 2);
    std::set<VertexId> rset;
    while ((int)rset.size() < k) rset.insert((VertexId)rng.range(0, n - 1));
    std::vector<VertexId> R(rset.begin(), rset.end());
    Pattern pat = strong_pattern(R);
    auto opt = test::oracle_min_cost(g, pat);
    Solution s = scss_2approx(g, R);
    REQUIRE(s.feasible == opt.has_value());
    if (!opt) continue;
    ++solved;
    CHECK(test::oracle_feasible(g, s.edge_ids, pat));
    CHECK(opt->cost <= s.cost);
    CHECK(s.cost <= Weight(2) * opt->cost);
  }
  CHECK(solved >= 30);
}
