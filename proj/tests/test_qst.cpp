#include "cds/qst.hpp"

#include <bit>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "cds/instance.hpp"

using namespace cds;

namespace {

// independent oracle: plain bitmask sweep over all vertex subsets
struct BruteQst {
  int min_edges = -1;  // -1 = infeasible
  std::uint64_t best_set = 0;
};

BruteQst brute_qst(const Graph& g, const std::vector<std::int64_t>& p, std::int64_t quota) {
  BruteQst out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n); ++mask) {
    std::int64_t profit = 0;
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) {
        profit += p[v];
        verts.push_back(v);
      }
    if (profit < quota) continue;
    if (!is_connected_induced(g, VertexSet(verts))) continue;
    int edges = static_cast<int>(verts.size()) - 1;
    if (out.min_edges < 0 || edges < out.min_edges) {
      out.min_edges = edges;
      out.best_set = mask;
    }
  }
  return out;
}

void require_valid_tree(const Graph& g, const VertexTree& t) {
  REQUIRE(t.size() >= 1);
  REQUIRE(t.cost() == t.size() - 1);
  REQUIRE(t.vertices.contains(t.root));
  std::vector<int> seen;
  for (auto [u, v] : t.edges) {
    REQUIRE(g.has_edge(u, v));
    REQUIRE(t.vertices.contains(u));
    REQUIRE(t.vertices.contains(v));
  }
  REQUIRE(is_connected_induced(g, t.vertices));
}

}  // namespace

TEST_CASE("qst_exact degenerate and forced cases") {
  Graph p3 = from_edge_list(3, {{0, 1}, {1, 2}});
  SECTION("zero quota returns the single vertex 0") {
    auto t = qst_exact(p3, {5, 5, 5}, 0);
    REQUIRE(t);
    REQUIRE(t->vertices == VertexSet::single(0));
    REQUIRE(t->cost() == 0);
  }
  SECTION("forced whole path") {
    auto t = qst_exact(p3, {1, 0, 1}, 2);
    REQUIRE(t);
    REQUIRE(t->vertices == VertexSet({0, 1, 2}));
    REQUIRE(t->cost() == 2);
  }
  SECTION("infeasible quota") {
    REQUIRE_FALSE(qst_exact(p3, {1, 1, 1}, 4).has_value());
  }
  SECTION("disconnected profits are unreachable") {
    Graph two = from_edge_list(4, {{0, 1}, {2, 3}});
    REQUIRE_FALSE(qst_exact(two, {1, 1, 1, 1}, 3).has_value());
  }
}

TEST_CASE("qst_exact equals subset-sweep oracle on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    Instance inst = gen_gnp(4 + static_cast<int>(rng() % 7), 0.3, rng());
    const Graph& g = inst.graph;
    std::vector<std::int64_t> p(g.n);
    for (auto& x : p) x = static_cast<std::int64_t>(rng() % 5);
    std::int64_t total = 0;
    for (auto x : p) total += x;
    std::int64_t quota = static_cast<std::int64_t>(rng() % (total + 2));

    auto expected = brute_qst(g, p, quota);
    auto got = qst_exact(g, p, quota);
    if (quota <= 0) {
      REQUIRE(got);
      continue;
    }
    if (expected.min_edges < 0) {
      REQUIRE_FALSE(got.has_value());
    } else {
      REQUIRE(got);
      REQUIRE(got->cost() == expected.min_edges);
      REQUIRE(got->profit(p) >= quota);
      require_valid_tree(g, *got);
    }
  }
}

TEST_CASE("qst_exact cost is monotone in the quota") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = gen_gnp(8, 0.4, rng());
    const Graph& g = inst.graph;
    std::vector<std::int64_t> p(g.n);
    for (auto& x : p) x = static_cast<std::int64_t>(rng() % 4);
    int prev_cost = 0;
    for (std::int64_t quota = 1; quota <= 8; ++quota) {
      auto t = qst_exact(g, p, quota);
      if (!t) break;
      REQUIRE(t->cost() >= prev_cost);
      prev_cost = t->cost();
    }
  }
}

TEST_CASE("qst_exact tie-break picks the lexicographically smallest set") {
  // two disjoint feasible pairs of equal cost: {0,1} and {2,3}
  Graph g = from_edge_list(4, {{0, 1}, {2, 3}, {1, 2}});
  auto t = qst_exact(g, {1, 1, 1, 1}, 2);
  REQUIRE(t);
  REQUIRE(t->vertices == VertexSet({0, 1}));
}

TEST_CASE("qst_heuristic stays feasible and compares against exact") {
  std::mt19937_64 rng(555);
  double worst_ratio = 1.0;
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = gen_gnp(12, 0.3, rng());
    const Graph& g = inst.graph;
    std::vector<std::int64_t> p(g.n);
    for (auto& x : p) x = static_cast<std::int64_t>(rng() % 6);
    std::int64_t total = 0;
    for (auto x : p) total += x;
    std::int64_t quota = total / 2;

    auto exact = qst_exact(g, p, quota);
    auto heur = qst_heuristic(g, p, quota);
    if (!exact) {
      REQUIRE_FALSE(heur.has_value());
      continue;
    }
    REQUIRE(heur);  // heuristic keeps feasibility whenever exact is feasible
    REQUIRE(heur->profit(p) >= quota);
    require_valid_tree(g, *heur);
    REQUIRE(heur->cost() >= exact->cost());
    if (exact->cost() > 0)
      worst_ratio = std::max(worst_ratio, static_cast<double>(heur->cost()) / exact->cost());
  }
  INFO("worst heuristic/exact cost ratio: " << worst_ratio);
  SUCCEED();
}

TEST_CASE("qst_heuristic trivial cases") {
  Graph g = from_edge_list(3, {{0, 1}, {1, 2}});
  auto t = qst_heuristic(g, {0, 7, 0}, 5);
  REQUIRE(t);
  REQUIRE(t->vertices == VertexSet::single(1));
  REQUIRE(t->cost() == 0);
}

TEST_CASE("qst_solve dispatches by size") {
  Instance small = gen_gnp(10, 0.4, 3);
  std::vector<std::int64_t> p(small.graph.n, 1);
  auto r = qst_solve(small.graph, p, 3, SolveMode::auto_mode);
  REQUIRE(r);
  REQUIRE(r->engine == QstEngine::exact);

  Instance big = gen_gnp(60, 0.15, 3);
  std::vector<std::int64_t> pb(big.graph.n, 1);
  auto rb = qst_solve(big.graph, pb, 10, SolveMode::auto_mode);
  REQUIRE(rb);
  REQUIRE(rb->engine == QstEngine::heuristic);

  auto rx = qst_solve(small.graph, p, 3, SolveMode::exact);
  REQUIRE(rx);
  REQUIRE(rx->tree.cost() == qst_exact(small.graph, p, 3)->cost());
}
