#include "cds/tree.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>
#include <set>

using namespace cds;

namespace {

RootedTree path_tree(const std::vector<std::int64_t>& profits) {
  int n = static_cast<int>(profits.size());
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_rooted_tree(labels, edges, 0, [&](int v) { return profits[v]; });
}

// random labelled tree on n vertices from a random parent sequence
RootedTree random_tree(int n, std::mt19937_64& rng, int max_profit = 9) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, static_cast<int>(rng() % v));
  std::vector<std::int64_t> profits(n);
  for (auto& p : profits) p = static_cast<std::int64_t>(rng() % (max_profit + 1));
  return make_rooted_tree(labels, edges, 0, [&](int v) { return profits[v]; });
}

// decode a Pruefer sequence into tree edges over 0..n-1
std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& code) {
  int n = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int v : code) ++degree[v];
  std::vector<std::pair<int, int>> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int v : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

void check_split_bounds(const RootedTree& t) {
  auto [t1, t2] = jordan_split(t);
  int n = t.size();
  REQUIRE(t1.size() <= t2.size());
  REQUIRE(t1.size() <= (n + 1) / 2);
  REQUIRE(t2.size() <= (2 * n + 2) / 3);
  // the parts share exactly one vertex and cover everything
  std::set<int> a(t1.labels.begin(), t1.labels.end());
  std::set<int> b(t2.labels.begin(), t2.labels.end());
  std::vector<int> shared;
  for (int v : a)
    if (b.count(v)) shared.push_back(v);
  REQUIRE(shared.size() == 1);
  REQUIRE(a.size() + b.size() == static_cast<std::size_t>(n) + 1);
  // edges are partitioned
  REQUIRE(t1.size() - 1 + t2.size() - 1 == n - 1);
}

}  // namespace

TEST_CASE("make_rooted_tree validates shape") {
  REQUIRE_THROWS_AS(make_rooted_tree({0, 1, 2}, {{0, 1}}, 0, [](int) { return 0; }),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_rooted_tree({0, 1, 2, 3}, {{0, 1}, {0, 1}, {2, 3}}, 0,
                                     [](int) { return 0; }),
                    std::invalid_argument);
}

TEST_CASE("jordan_split small cases") {
  SECTION("path of 12: smaller part within 6, larger within 8") {
    auto t = path_tree(std::vector<std::int64_t>(12, 1));
    auto [t1, t2] = jordan_split(t);
    REQUIRE(t1.size() <= 6);
    REQUIRE(t2.size() <= 8);
    check_split_bounds(t);
  }
  SECTION("star with 5 leaves splits at the center") {
    std::vector<int> labels = {0, 1, 2, 3, 4, 5};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
    auto t = make_rooted_tree(labels, edges, 0, [](int) { return 1; });
    auto [t1, t2] = jordan_split(t);
    // both parts contain the center
    REQUIRE(std::count(t1.labels.begin(), t1.labels.end(), 0) == 1);
    REQUIRE(std::count(t2.labels.begin(), t2.labels.end(), 0) == 1);
    check_split_bounds(t);
  }
  SECTION("two-vertex tree") {
    auto t = path_tree({1, 1});
    auto [t1, t2] = jordan_split(t);
    REQUIRE(t1.size() == 1);
    REQUIRE(t2.size() == 2);
  }
  SECTION("singleton refuses") {
    auto t = path_tree({1});
    REQUIRE_THROWS_AS(jordan_split(t), TooSmallError);
  }
}

TEST_CASE("jordan_split bounds hold on every tree with up to 7 vertices") {
  // n=8,9 run exhaustively in the acceptance suite
  check_split_bounds(path_tree({1, 1}));
  for (int n = 3; n <= 7; ++n) {
    int code_len = n - 2;
    long total = 1;
    for (int i = 0; i < code_len; ++i) total *= n;
    for (long idx = 0; idx < total; ++idx) {
      std::vector<int> code(code_len);
      long rest = idx;
      for (int i = 0; i < code_len; ++i) {
        code[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      std::vector<int> labels(n);
      std::iota(labels.begin(), labels.end(), 0);
      auto t = make_rooted_tree(labels, pruefer_decode(code), 0, [](int) { return 1; });
      check_split_bounds(t);
    }
  }
}

TEST_CASE("jordan_split bounds hold on random larger trees") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 10 + static_cast<int>(rng() % 150);
    check_split_bounds(random_tree(n, rng));
  }
}

TEST_CASE("decompose_13 basics") {
  std::mt19937_64 rng(9);
  SECTION("small tree returns itself") {
    auto t = path_tree({1, 2, 3});
    auto parts = decompose_13(t, 5);
    REQUIRE(parts.size() == 1);
    REQUIRE(parts[0].labels == t.labels);
  }
  SECTION("budget below the minimum refuses") {
    auto t = path_tree({1, 2, 3});
    REQUIRE_THROWS_AS(decompose_13(t, 2), BudgetTooSmallError);
  }
  SECTION("oversized tree refuses") {
    auto t = random_tree(40, rng);
    REQUIRE_THROWS_AS(decompose_13(t, 3), std::invalid_argument);
  }
  SECTION("caterpillar of 120 vertices at k=20") {
    std::vector<int> labels(120);
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 60; ++i) edges.emplace_back(i - 1, i);   // spine
    for (int i = 0; i < 60; ++i) edges.emplace_back(i, 60 + i);  // hairs
    auto t = make_rooted_tree(labels, edges, 0, [](int) { return 1; });
    auto parts = decompose_13(t, 20);
    REQUIRE(parts.size() <= 13);
    std::set<int> covered;
    for (const auto& p : parts) {
      REQUIRE(p.size() <= 20);
      covered.insert(p.labels.begin(), p.labels.end());
    }
    REQUIRE(covered.size() == 120);
  }
}

TEST_CASE("decompose_13 on full-size random trees") {
  std::mt19937_64 rng(5150);
  for (int k : {3, 7, 15, 40}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto t = random_tree(6 * k, rng);
      auto parts = decompose_13(t, k);
      REQUIRE(parts.size() <= 13);
      std::set<int> covered;
      for (const auto& p : parts) {
        REQUIRE(p.size() <= k);
        covered.insert(p.labels.begin(), p.labels.end());
      }
      REQUIRE(covered.size() == static_cast<std::size_t>(6 * k));
    }
  }
}

TEST_CASE("best_k_subtree simple cases") {
  SECTION("budget beyond the tree returns everything") {
    auto t = path_tree({3, 1, 4, 1, 5});
    auto best = best_k_subtree(t, 99);
    REQUIRE(best.size() == 5);
    REQUIRE(best.total_profit() == 14);
  }
  SECTION("alternating path keeps the high-profit middle") {
    auto t = path_tree({1, 100, 1, 100, 1});
    auto best = best_k_subtree(t, 3);
    REQUIRE(best.total_profit() == 201);
    REQUIRE(best.label_set() == VertexSet({1, 2, 3}));
  }
  SECTION("budget must be positive") {
    auto t = path_tree({1});
    REQUIRE_THROWS_AS(best_k_subtree(t, 0), std::invalid_argument);
  }
}

TEST_CASE("brute_best_subtree simple cases") {
  SECTION("single vertex") {
    auto t = path_tree({7});
    auto best = brute_best_subtree(t, 1);
    REQUIRE(best.size() == 1);
    REQUIRE(best.total_profit() == 7);
  }
  SECTION("zero profits give one vertex, the smallest") {
    auto t = path_tree({0, 0, 0, 0});
    auto best = brute_best_subtree(t, 3);
    REQUIRE(best.label_set() == VertexSet::single(0));
  }
  SECTION("size cap refusal") {
    std::mt19937_64 rng(3);
    auto t = random_tree(19, rng);
    REQUIRE_THROWS_AS(brute_best_subtree(t, 3), TooLargeError);
  }
}

TEST_CASE("best_k_subtree equals the exhaustive oracle") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 15);
    auto t = random_tree(n, rng);
    int k = 1 + static_cast<int>(rng() % n);
    auto dp = best_k_subtree(t, k);
    auto brute = brute_best_subtree(t, k);
    REQUIRE(dp.total_profit() == brute.total_profit());
    REQUIRE(dp.size() <= k);
    // the DP's set really carries the claimed profit
    std::int64_t recount = 0;
    for (int label : dp.labels) {
      auto it = std::lower_bound(t.labels.begin(), t.labels.end(), label);
      recount += t.profits[it - t.labels.begin()];
    }
    REQUIRE(recount == dp.total_profit());
  }
}

TEST_CASE("best subtree grabs at least a thirteenth of a 6k tree") {
  std::mt19937_64 rng(31337);
  for (int k : {3, 5, 9}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto t = random_tree(6 * k, rng);
      auto best = best_k_subtree(t, k);
      REQUIRE(13 * best.total_profit() >= t.total_profit());
    }
  }
}
