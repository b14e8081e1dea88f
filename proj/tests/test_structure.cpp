#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dsn/errors.hpp"
#include "dsn/graph.hpp"
#include "dsn/planarity.hpp"
#include "dsn/reach.hpp"
#include "dsn/rng.hpp"
#include "dsn/structure.hpp"
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

EdgeId arc(const Graph& g, VertexId a, VertexId b) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edges[e].tail == a && g.edges[e].head == b) return e;
  REQUIRE(false);
  return -1;
}

std::set<VertexId> neighbours(const Graph& g, VertexId v) {
  std::set<VertexId> nb;
  for (const Edge& e : g.edges) {
    if (e.tail == v) nb.insert(e.head);
    if (e.head == v) nb.insert(e.tail);
  }
  return nb;
}

// Degree-reduction post-conditions: bidirected; terminals with edges keep a
// single Steiner neighbour; Steiner vertices away from terminals have
// exactly three neighbours, splitters at most three.
void check_reduced_shape(const Graph& out, const std::vector<VertexId>& terminals) {
  CHECK(is_bidirected(out));
  std::vector<char> is_term(out.n, 0);
  for (VertexId t : terminals) is_term[t] = 1;
  for (VertexId v = 0; v < out.n; ++v) {
    auto nb = neighbours(out, v);
    if (nb.empty()) continue;
    if (is_term[v]) {
      CHECK(nb.size() == 1);
      CHECK(!is_term[*nb.begin()]);
    } else {
      bool near_terminal = false;
      for (VertexId w : nb) near_terminal |= (bool)is_term[w];
      if (near_terminal)
        CHECK(nb.size() <= 3);
      else
        CHECK(nb.size() == 3);
    }
  }
}

Weight origin_cost(const Graph& original, const std::vector<EdgeId>& ids) {
  Weight c;
  for (EdgeId e : ids) c += original.edges[e].weight;
  return c;
}

}  // namespace

TEST_CASE("tie break order: weight then endpoints") {
  Graph g = bidirected(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 1}});
  auto rank = tie_break_rank(g);
  // Weight-1 units precede the weight-2 unit.
  CHECK(rank[arc(g, 1, 2)] < rank[arc(g, 0, 1)]);
  CHECK(rank[arc(g, 2, 1)] < rank[arc(g, 1, 0)]);
  // Equal weight: (0,2) precedes (1,2) on the smaller endpoint.
  CHECK(rank[arc(g, 0, 2)] < rank[arc(g, 1, 2)]);
  // All ranks distinct and dense.
  std::set<int> seen(rank.begin(), rank.end());
  CHECK((int)seen.size() == g.edge_count());
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == g.edge_count() - 1);
}

TEST_CASE("tie break order: reverse pairs adjacent even when parallel pairs interleave") {
  Graph g;
  g.n = 2;
  g.add_edge(0, 1, Weight(1));  // id 0, paired with id 2
  g.add_edge(0, 1, Weight(1));  // id 1, paired with id 3
  g.add_edge(1, 0, Weight(1));  // id 2
  g.add_edge(1, 0, Weight(1));  // id 3
  auto rank = tie_break_rank(g);
  CHECK(rank[2] == rank[0] + 1);
  CHECK(rank[3] == rank[1] + 1);
}

TEST_CASE("reduce degrees: star gains pendant splitters, centre keeps three neighbours") {
  Graph g = bidirected(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  std::vector<VertexId> terminals = {1, 2, 3};
  ReducedGraph red = reduce_degrees(g, terminals);

  CHECK(red.graph.n == 7);
  CHECK(red.graph.edge_count() == 12);  // three original units plus three pendants
  check_reduced_shape(red.graph, terminals);
  CHECK(neighbours(red.graph, 0).size() == 3);
  for (VertexId t : terminals) {
    auto nb = neighbours(red.graph, t);
    REQUIRE(nb.size() == 1);
    VertexId split = *nb.begin();
    CHECK(split >= 4);
    CHECK(neighbours(red.graph, split) == std::set<VertexId>{t, 0});
    CHECK(arc(red.graph, t, split) >= 0);
    CHECK(red.graph.edges[arc(red.graph, t, split)].weight == Weight(0));
  }

  // Moved units keep their provenance; pendants carry none.
  for (EdgeId e = 0; e < red.graph.edge_count(); ++e) {
    const auto& origin = red.trace.edge_origin[e];
    if (red.graph.edges[e].weight == Weight(0))
      CHECK(origin.empty());
    else {
      REQUIRE(origin.size() == 1);
      CHECK(g.edges[origin[0]].weight == red.graph.edges[e].weight);
    }
  }

  // Optimum for demand 1 -> 2 is unchanged at cost 2.
  Pattern p;
  p.terminals = {1, 2, 3};
  p.demands = {{1, 2}};
  p.normalize();
  auto before = test::oracle_min_cost(g, p);
  auto after = test::oracle_min_cost(red.graph, p);
  REQUIRE(before.has_value());
  REQUIRE(after.has_value());
  CHECK(before->cost == after->cost);
  CHECK(before->cost == Weight(2));

  // Pulling the reduced optimum back yields a feasible original solution of
  // the same cost.
  auto mapped = map_back(red.trace, after->edge_ids);
  CHECK(check_feasible(g, mapped, p));
  CHECK(origin_cost(g, mapped) == after->cost);
}

TEST_CASE("reduce degrees: adjacent terminal pair becomes a splitter chain") {
  Graph g = bidirected(2, {{0, 1, 3}});
  std::vector<VertexId> terminals = {0, 1};
  ReducedGraph red = reduce_degrees(g, terminals);

  CHECK(red.graph.n == 4);
  CHECK(red.graph.edge_count() == 6);
  check_reduced_shape(red.graph, terminals);
  CHECK(neighbours(red.graph, 0) == std::set<VertexId>{2});
  CHECK(neighbours(red.graph, 1) == std::set<VertexId>{3});
  CHECK(neighbours(red.graph, 2) == std::set<VertexId>{0, 3});
  CHECK(red.graph.edges[arc(red.graph, 2, 3)].weight == Weight(3));
  CHECK(red.graph.edges[arc(red.graph, 0, 2)].weight == Weight(0));

  // The middle unit inherits the original pair.
  CHECK(red.trace.edge_origin[arc(red.graph, 2, 3)] == std::vector<EdgeId>{0});
  CHECK(red.trace.edge_origin[arc(red.graph, 3, 2)] == std::vector<EdgeId>{1});

  Pattern p;
  p.terminals = {0, 1};
  p.demands = {{0, 1}};
  p.normalize();
  auto after = test::oracle_min_cost(red.graph, p);
  REQUIRE(after.has_value());
  CHECK(after->cost == Weight(3));
  auto mapped = map_back(red.trace, after->edge_ids);
  CHECK(mapped == std::vector<EdgeId>{0});
}

TEST_CASE("reduce degrees: degree-5 Steiner vertex splits into a bounded chain") {
  std::vector<std::tuple<int, int, int>> units;
  for (int leaf = 1; leaf <= 5; ++leaf) units.push_back({0, leaf, 1});
  Graph g = bidirected(6, units);
  std::vector<VertexId> terminals = {1, 2, 3, 4, 5};
  ReducedGraph red = reduce_degrees(g, terminals);

  check_reduced_shape(red.graph, terminals);
  CHECK(is_planar(red.graph));
  for (const TransformOp& op : red.trace.ops)
    if (op.kind == TransformKind::SplitSteiner) CHECK(op.old_ids[0] == 0);
  int splits = 0;
  for (const TransformOp& op : red.trace.ops)
    splits += op.kind == TransformKind::SplitSteiner;
  CHECK(splits == 2);  // degree 5 needs two splits to reach three neighbours

  Pattern p;
  p.terminals = terminals;
  p.demands = {{1, 2}};
  p.normalize();
  auto before = test::oracle_min_cost(g, p);
  REQUIRE(before.has_value());
  CHECK(before->cost == Weight(2));
}

TEST_CASE("reduce degrees: rejects non-bidirected input and duplicate terminals") {
  Graph g;
  g.n = 2;
  g.add_edge(0, 1, Weight(1));
  CHECK_THROWS_AS(reduce_degrees(g, {0}), ContractError);
  Graph ok = bidirected(2, {{0, 1, 1}});
  CHECK_THROWS_AS(reduce_degrees(ok, {0, 0}), ContractError);
}

TEST_CASE("reduce degrees: random instances keep the optimum and planarity") {
  Rng rng(417);
  int checked = 0;
  for (int iter = 0; iter < 60; ++iter) {
    int n = 3 + (int)rng.range(0, 2);
    int want_units = 2 + (int)rng.range(0, 2);
    std::set<std::pair<int, int>> used;
    std::vector<std::tuple<int, int, int>> units;
    int guard = 0;
    while ((int)units.size() < want_units && guard++ < 50) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b) continue;
      auto key = std::minmax(a, b);
      if (!used.insert({key.first, key.second}).second) continue;
      units.push_back({key.first, key.second, (int)rng.range(1, 4)});
    }
    Graph g = bidirected(n, units);

    std::vector<VertexId> terminals;
    for (VertexId v = 0; v < n && (int)terminals.size() < 3; ++v)
      if (rng.chance(1, 2)) terminals.push_back(v);
    if (terminals.size() < 2) terminals = {0, 1};
    Pattern p;
    p.terminals = terminals;
    p.demands.clear();
    for (size_t i = 0; i + 1 < terminals.size(); ++i)
      p.demands.push_back({terminals[i], terminals[i + 1]});
    p.normalize();

    ReducedGraph red = reduce_degrees(g, terminals);
    check_reduced_shape(red.graph, terminals);
    CHECK(is_planar(g) == is_planar(red.graph));

    auto before = test::oracle_min_cost(g, p);
    REQUIRE(red.graph.edge_count() <= 22);
    auto after = test::oracle_min_cost(red.graph, p);
    CHECK(before.has_value() == after.has_value());
    if (before && after) {
      CHECK(before->cost == after->cost);
      auto mapped = map_back(red.trace, after->edge_ids);
      CHECK(check_feasible(g, mapped, p));
      CHECK(origin_cost(g, mapped) == after->cost);
      checked++;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("replace polycycle: alternating square becomes a directed cycle") {
  Graph g = bidirected(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  Pattern p;
  p.terminals = {0, 1};
  p.demands = {{0, 1}};
  p.normalize();
  std::vector<EdgeId> alt = {arc(g, 0, 1), arc(g, 2, 1), arc(g, 2, 3), arc(g, 0, 3)};
  Solution n = make_solution(g, alt, p);
  std::vector<EdgeId> cycle = {arc(g, 0, 1), arc(g, 2, 1), arc(g, 2, 3), arc(g, 0, 3)};
  Solution m = replace_polycycle(g, n, cycle, p);

  CHECK(m.cost == Weight(4));
  CHECK(m.edge_ids.size() == 4);
  // The result is one directed cycle over all four vertices.
  std::vector<int> outdeg(4, 0), indeg(4, 0);
  for (EdgeId e : m.edge_ids) {
    outdeg[g.edges[e].tail]++;
    indeg[g.edges[e].head]++;
  }
  for (int v = 0; v < 4; ++v) {
    CHECK(outdeg[v] == 1);
    CHECK(indeg[v] == 1);
  }
  auto reach = test::closure_matrix(g, m.edge_ids);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(reach[a][b]);
}

TEST_CASE("replace polycycle: a directed cycle is left unchanged") {
  Graph g = bidirected(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  Pattern p;
  p.terminals = {0, 2};
  p.demands = {{0, 2}};
  p.normalize();
  std::vector<EdgeId> ids = {arc(g, 0, 1), arc(g, 1, 2), arc(g, 2, 3), arc(g, 3, 0)};
  Solution n = make_solution(g, ids, p);
  Solution m = replace_polycycle(g, n, ids, p);
  CHECK(m.edge_ids == n.edge_ids);
  CHECK(m.cost == n.cost);
}

TEST_CASE("replace polycycle: chord over the cycle becomes prunable") {
  Graph g = bidirected(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 2, 1}});
  Pattern p = Pattern::all_pairs({0, 1, 2, 3});
  std::vector<EdgeId> ids = {arc(g, 0, 1), arc(g, 2, 1), arc(g, 2, 3), arc(g, 0, 3),
                             arc(g, 0, 2), arc(g, 2, 0)};
  std::vector<EdgeId> cycle = {arc(g, 0, 1), arc(g, 2, 1), arc(g, 2, 3), arc(g, 0, 3)};
  Solution n = make_solution(g, ids, p);
  CHECK(!n.feasible);  // alternating square with a chord still misses demands
  Solution m = replace_polycycle(g, n, cycle, p);
  CHECK(m.feasible);
  CHECK(m.cost <= n.cost);
  Solution pruned = prune_minimal(g, m, p);
  CHECK(pruned.cost == Weight(4));
  for (EdgeId e : pruned.edge_ids) {
    auto key = std::minmax(g.edges[e].tail, g.edges[e].head);
    CHECK(std::make_pair(key.first, key.second) != std::make_pair(0, 2));
  }
}

TEST_CASE("replace polycycle: contract violations") {
  Graph g = bidirected(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  Pattern p;
  p.terminals = {0, 1};
  p.demands = {{0, 1}};
  p.normalize();
  std::vector<EdgeId> ids = {arc(g, 0, 1), arc(g, 1, 2), arc(g, 2, 3), arc(g, 3, 0)};
  Solution n = make_solution(g, ids, p);

  // Edge not in N.
  CHECK_THROWS_AS(
      replace_polycycle(g, n, {arc(g, 1, 0), arc(g, 1, 2), arc(g, 2, 3), arc(g, 3, 0)}, p),
      ContractError);
  // Reverse pair inside the cycle.
  Solution with_rev =
      make_solution(g, {arc(g, 0, 1), arc(g, 1, 0), arc(g, 2, 3), arc(g, 3, 0)}, p);
  CHECK_THROWS_AS(replace_polycycle(g, with_rev, {arc(g, 0, 1), arc(g, 1, 0)}, p),
                  ContractError);
  // Non-consecutive sequence.
  CHECK_THROWS_AS(
      replace_polycycle(g, n, {arc(g, 0, 1), arc(g, 2, 3), arc(g, 1, 2), arc(g, 3, 0)}, p),
      ContractError);
}

TEST_CASE("canonicalize: two disjoint paths merge into one strong component") {
  Graph g = bidirected(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
  Pattern p;
  p.terminals = {0, 3};
  p.demands = {{0, 3}};
  p.normalize();
  std::vector<EdgeId> ids = {arc(g, 0, 1), arc(g, 1, 3), arc(g, 0, 2), arc(g, 2, 3)};
  Solution n = make_solution(g, ids, p);
  Solution m = canonicalize_components(g, n, p);

  CHECK(m.cost <= n.cost);
  CHECK(m.feasible);
  auto reach = test::closure_matrix(g, m.edge_ids);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(reach[a][b]);
  Condensation cond = scc_condensation(g, m.edge_ids);
  CHECK(cond.dag.n == 1);
}

TEST_CASE("canonicalize: poly-trees and directed cycles are already canonical") {
  Graph g = bidirected(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  Pattern p;
  p.terminals = {0, 2};
  p.demands = {{0, 2}};
  p.normalize();

  Solution tree = make_solution(g, {arc(g, 0, 1), arc(g, 1, 2)}, p);
  Solution tree_after = canonicalize_components(g, tree, p);
  CHECK(tree_after.edge_ids == tree.edge_ids);

  Solution cyc = make_solution(g, {arc(g, 0, 1), arc(g, 1, 2), arc(g, 2, 3), arc(g, 3, 0)}, p);
  Solution cyc_after = canonicalize_components(g, cyc, p);
  CHECK(cyc_after.edge_ids == cyc.edge_ids);
}

TEST_CASE("canonicalize: random solutions keep cost, reachability, and get forest condensations") {
  Rng rng(90125);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 4 + (int)rng.range(0, 2);
    std::set<std::pair<int, int>> used;
    std::vector<std::tuple<int, int, int>> units;
    int want = n + (int)rng.range(0, 2);
    int guard = 0;
    while ((int)units.size() < want && guard++ < 60) {
      int a = (int)rng.range(0, n - 1), b = (int)rng.range(0, n - 1);
      if (a == b) continue;
      auto key = std::minmax(a, b);
      if (!used.insert({key.first, key.second}).second) continue;
      units.push_back({key.first, key.second, (int)rng.range(1, 4)});
    }
    Graph g = bidirected(n, units);
    Pattern p;
    p.terminals = {0, 1};
    p.demands = {{0, 1}};
    p.normalize();

    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng.chance(2, 3)) ids.push_back(e);
    Solution n0 = make_solution(g, ids, p);
    Solution m = canonicalize_components(g, n0, p);

    CHECK(m.cost <= n0.cost);
    auto before = test::closure_matrix(g, n0.edge_ids);
    auto after = test::closure_matrix(g, m.edge_ids);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (before[a][b]) CHECK(after[a][b]);

    // Condensation underlying graph is a forest: edges < components touched.
    Condensation cond = scc_condensation(g, m.edge_ids);
    std::set<std::pair<int, int>> dag_units;
    for (const Edge& e : cond.dag.edges) {
      auto key = std::minmax(e.tail, e.head);
      dag_units.insert({key.first, key.second});
    }
    std::set<int> touched;
    for (const Edge& e : cond.dag.edges) {
      touched.insert(e.tail);
      touched.insert(e.head);
    }
    CHECK(dag_units.size() < std::max<size_t>(1, touched.size() + 1));
    if (n0.feasible) CHECK(m.feasible);
  }
}

TEST_CASE("prune minimal: triangle with one demand keeps a single edge") {
  Graph g = bidirected(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  Pattern p;
  p.terminals = {0, 1};
  p.demands = {{0, 1}};
  p.normalize();
  std::vector<EdgeId> all(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
  Solution n = make_solution(g, all, p);
  Solution m = prune_minimal(g, n, p);
  CHECK(m.edge_ids == std::vector<EdgeId>{arc(g, 0, 1)});
  CHECK(m.cost == Weight(1));
}

TEST_CASE("prune minimal: detour removal, minimality, and the infeasible contract") {
  Graph g = bidirected(4, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 2, 1}});
  Pattern p;
  p.terminals = {0, 2};
  p.demands = {{0, 2}};
  p.normalize();
  std::vector<EdgeId> ids = {arc(g, 0, 1), arc(g, 1, 2), arc(g, 0, 3), arc(g, 3, 2)};
  Solution n = make_solution(g, ids, p);
  Solution m = prune_minimal(g, n, p);
  CHECK(m.edge_ids.size() == 2);
  for (size_t i = 0; i < m.edge_ids.size(); ++i) {
    std::vector<EdgeId> less = m.edge_ids;
    less.erase(less.begin() + i);
    CHECK(!check_feasible(g, less, p));
  }

  Solution empty;
  CHECK_THROWS_AS(prune_minimal(g, empty, p), ContractError);
}

TEST_CASE("map back: rejects ids outside the trace") {
  Graph g = bidirected(2, {{0, 1, 1}});
  ReducedGraph red = reduce_degrees(g, {0, 1});
  CHECK_THROWS_AS(map_back(red.trace, {red.graph.edge_count()}), ContractError);
}
