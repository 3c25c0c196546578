#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "cds/graph.hpp"

namespace cds {

/// A tree living inside a host graph: a vertex set plus tree edges, each an
/// edge of the host. Cost is the edge count, size the vertex count.
struct VertexTree {
  VertexSet vertices;
  std::vector<std::pair<int, int>> edges;
  int root = -1;

  int size() const { return static_cast<int>(vertices.size()); }
  int cost() const { return static_cast<int>(edges.size()); }

  std::int64_t profit(const std::vector<std::int64_t>& p) const {
    std::int64_t t = 0;
    for (int v : vertices) t += p[v];
    return t;
  }
};

/// BFS spanning tree of a connected vertex set, rooted at its smallest id.
inline VertexTree spanning_tree(const Graph& g, const VertexSet& verts) {
  VertexTree t;
  t.vertices = verts;
  if (verts.empty()) return t;
  t.root = verts.ids().front();
  std::vector<char> in(g.n, 0), seen(g.n, 0);
  for (int v : verts) in[v] = 1;
  std::queue<int> q;
  q.push(t.root);
  seen[t.root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.adj[v])
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        t.edges.emplace_back(v, u);
        q.push(u);
      }
  }
  return t;
}

enum class QstEngine { exact, heuristic };

struct QstResult {
  VertexTree tree;
  QstEngine engine;
};

namespace detail {

struct QstExactSearch {
  const std::vector<std::uint64_t>& adj;
  const std::vector<std::int64_t>& p;
  std::int64_t quota;
  int best_size = std::numeric_limits<int>::max();
  std::uint64_t best_set = 0;

  std::int64_t pos(int v) const { return p[v] > 0 ? p[v] : 0; }

  void grow(std::uint64_t s, std::uint64_t nbhd, std::uint64_t banned, int size,
            std::int64_t profit, std::int64_t avail) {
    if (profit >= quota) {
      if (size < best_size || (size == best_size && lex_less_same_size(s, best_set))) {
        best_size = size;
        best_set = s;
      }
      return;  // supersets only cost more
    }
    if (size >= best_size) return;
    if (profit + avail < quota) return;
    std::uint64_t cand = nbhd & ~s & ~banned;
    while (cand) {
      int u = std::countr_zero(cand);
      std::uint64_t bit = std::uint64_t{1} << u;
      cand &= cand - 1;
      grow(s | bit, nbhd | adj[u], banned, size + 1, profit + p[u], avail - pos(u));
      banned |= bit;
      avail -= pos(u);
    }
  }
};

}  // namespace detail

/// Minimum-edge tree whose vertex profits reach the quota, found by exact
/// branch-and-bound over connected subsets. Ties between equal-cost trees go
/// to the lexicographically smallest vertex set. Quota zero degenerates to
/// the single vertex 0. Empty optional when no connected subset reaches the
/// quota.
inline std::optional<VertexTree> qst_exact(const Graph& g, const std::vector<std::int64_t>& p,
                                           std::int64_t quota) {
  if (g.n > 64) throw TooLargeError("exact quota-tree engine supports n <= 64");
  if (quota <= 0) return spanning_tree(g, VertexSet::single(0));
  std::int64_t total = 0;
  for (int v = 0; v < g.n; ++v)
    if (p[v] > 0) total += p[v];
  if (total < quota) return std::nullopt;

  auto adj = detail::adjacency_masks(g);
  detail::QstExactSearch search{adj, p, quota};
  std::int64_t avail = total;
  for (int s = 0; s < g.n; ++s) {
    std::uint64_t bit = std::uint64_t{1} << s;
    search.grow(bit, adj[s], bit - 1, 1, p[s], avail - search.pos(s));
    avail -= search.pos(s);  // later seeds never use vertices below them
  }
  if (search.best_size == std::numeric_limits<int>::max()) return std::nullopt;
  return spanning_tree(g, detail::set_from_mask(search.best_set));
}

namespace detail {

inline std::optional<VertexTree> qst_heuristic_from(const Graph& g,
                                                    const std::vector<std::int64_t>& p,
                                                    std::int64_t quota, int seed) {
  VertexTree t;
  t.root = seed;
  t.vertices.insert(seed);
  std::vector<char> in_tree(g.n, 0);
  in_tree[seed] = 1;
  std::int64_t profit = p[seed];

  std::vector<int> dist(g.n);
  while (profit < quota) {
    // multi-source BFS from the current tree
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    for (int v : t.vertices) {
      dist[v] = 0;
      q.push(v);
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    int pick = -1;
    for (int v = 0; v < g.n; ++v) {
      if (in_tree[v] || p[v] <= 0 || dist[v] < 0) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      // dist/p ratio compared exactly by cross-multiplication
      std::int64_t lhs = static_cast<std::int64_t>(dist[v]) * p[pick];
      std::int64_t rhs = static_cast<std::int64_t>(dist[pick]) * p[v];
      if (lhs < rhs || (lhs == rhs && dist[v] < dist[pick])) pick = v;
    }
    if (pick < 0) return std::nullopt;
    // walk back toward the tree, always via the smallest-id predecessor
    int cur = pick;
    while (dist[cur] > 0) {
      int prev = -1;
      for (int u : g.adj[cur])
        if (dist[u] == dist[cur] - 1) {
          prev = u;
          break;
        }
      t.vertices.insert(cur);
      in_tree[cur] = 1;
      profit += p[cur];
      t.edges.emplace_back(prev, cur);
      cur = prev;
    }
  }
  return t;
}

}  // namespace detail

/// Feasible (not necessarily optimal) quota tree: seed at the max-profit
/// vertex, then repeatedly attach the positive-profit vertex with the best
/// hop-distance-to-profit ratio along a shortest path. On disconnected
/// graphs the remaining components' best seeds are tried in turn, so
/// feasibility is preserved whenever a quota tree exists at all.
inline std::optional<VertexTree> qst_heuristic(const Graph& g, const std::vector<std::int64_t>& p,
                                               std::int64_t quota) {
  std::vector<int> seeds;
  for (auto& comp : connected_components(g)) {
    int best = comp.front();
    for (int v : comp)
      if (p[v] > p[best]) best = v;
    seeds.push_back(best);
  }
  std::stable_sort(seeds.begin(), seeds.end(), [&](int a, int b) { return p[a] > p[b]; });
  for (int seed : seeds)
    if (auto t = detail::qst_heuristic_from(g, p, quota, seed)) return t;
  return std::nullopt;
}

enum class SolveMode { exact, heuristic, auto_mode };

inline constexpr int kAutoExactMaxVertices = 20;

inline QstEngine resolve_engine(SolveMode mode, int n) {
  if (mode == SolveMode::exact) return QstEngine::exact;
  if (mode == SolveMode::heuristic) return QstEngine::heuristic;
  return n <= kAutoExactMaxVertices ? QstEngine::exact : QstEngine::heuristic;
}

inline std::optional<QstResult> qst_solve(const Graph& g, const std::vector<std::int64_t>& p,
                                          std::int64_t quota, SolveMode mode) {
  QstEngine engine = resolve_engine(mode, g.n);
  auto tree = engine == QstEngine::exact ? qst_exact(g, p, quota) : qst_heuristic(g, p, quota);
  if (!tree) return std::nullopt;
  return QstResult{std::move(*tree), engine};
}

}  // namespace cds
