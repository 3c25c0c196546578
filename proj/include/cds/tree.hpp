#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "cds/graph.hpp"
#include "cds/qst.hpp"

namespace cds {

/// Rooted tree with per-vertex profits. Nodes are indexed 0..size-1 in
/// ascending label order; labels are the ids the tree's vertices carry in
/// the host graph. Children lists are ascending, so every traversal below
/// is deterministic.
struct RootedTree {
  std::vector<int> labels;
  std::vector<std::int64_t> profits;
  std::vector<int> parent;  // node index, -1 at the root
  std::vector<std::vector<int>> children;
  int root = 0;

  int size() const { return static_cast<int>(labels.size()); }

  std::int64_t total_profit() const {
    std::int64_t t = 0;
    for (std::int64_t p : profits) t += p;
    return t;
  }

  VertexSet label_set() const { return VertexSet(labels); }
};

/// Builds a RootedTree from labelled edges. Throws if the edges do not form
/// a tree spanning the labels.
inline RootedTree make_rooted_tree(std::vector<int> labels,
                                   const std::vector<std::pair<int, int>>& edges, int root_label,
                                   const std::function<std::int64_t(int)>& profit_of) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int m = static_cast<int>(labels.size());
  if (static_cast<int>(edges.size()) != m - 1)
    throw std::invalid_argument("tree needs exactly size-1 edges");

  auto index_of = [&](int label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
      throw std::invalid_argument("edge endpoint " + std::to_string(label) + " not a tree vertex");
    return static_cast<int>(it - labels.begin());
  };

  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : edges) {
    int ia = index_of(a), ib = index_of(b);
    adj[ia].push_back(ib);
    adj[ib].push_back(ia);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  RootedTree t;
  t.labels = labels;
  t.profits.resize(m);
  for (int i = 0; i < m; ++i) t.profits[i] = profit_of(labels[i]);
  t.parent.assign(m, -2);
  t.children.assign(m, {});
  t.root = index_of(root_label);
  t.parent[t.root] = -1;
  std::vector<int> stack = {t.root};
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : adj[v])
      if (t.parent[u] == -2) {
        t.parent[u] = v;
        t.children[v].push_back(u);
        stack.push_back(u);
      }
  }
  if (reached != m) throw std::invalid_argument("edges do not connect all tree vertices");
  return t;
}

inline RootedTree rooted_from_vertex_tree(const VertexTree& vt,
                                          const std::vector<std::int64_t>& profits) {
  return make_rooted_tree(vt.vertices.ids(), vt.edges, vt.root,
                          [&](int label) { return profits[label]; });
}

namespace detail {

inline std::vector<int> subtree_sizes(const RootedTree& t) {
  // reverse BFS order gives children before parents
  std::vector<int> order;
  order.reserve(t.size());
  order.push_back(t.root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : t.children[order[i]]) order.push_back(c);
  std::vector<int> size(t.size(), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (t.parent[*it] >= 0) size[t.parent[*it]] += size[*it];
  return size;
}

// Subtree (as node list) hanging at `top` in t.
inline void collect_subtree(const RootedTree& t, int top, std::vector<int>& out) {
  std::size_t start = out.size();
  out.push_back(top);
  for (std::size_t i = start; i < out.size(); ++i)
    for (int c : t.children[out[i]]) out.push_back(c);
}

inline RootedTree subtree_on_nodes(const RootedTree& t, const std::vector<int>& nodes,
                                   int root_node) {
  std::vector<char> in(t.size(), 0);
  for (int v : nodes) in[v] = 1;
  std::vector<int> labels;
  std::vector<std::pair<int, int>> edges;
  labels.reserve(nodes.size());
  for (int v : nodes) {
    labels.push_back(t.labels[v]);
    if (t.parent[v] >= 0 && in[t.parent[v]])
      edges.emplace_back(t.labels[v], t.labels[t.parent[v]]);
  }
  return make_rooted_tree(labels, edges, t.labels[root_node], [&](int label) {
    auto it = std::lower_bound(t.labels.begin(), t.labels.end(), label);
    return t.profits[it - t.labels.begin()];
  });
}

}  // namespace detail

/// Splits a tree into two trees sharing exactly one duplicated vertex and
/// partitioning the edges, with the smaller part within ceil(n/2) vertices
/// and the larger within ceil(2n/3). The split vertex is found by walking
/// from the root toward the heaviest subtree until every detached component
/// is small enough, then packing components onto the two sides.
inline std::pair<RootedTree, RootedTree> jordan_split(const RootedTree& t) {
  const int m = t.size();
  if (m < 2) throw TooSmallError("cannot split a tree with fewer than 2 vertices");

  auto size = detail::subtree_sizes(t);
  int c = t.root;
  while (true) {
    int heavy = -1;
    for (int ch : t.children[c])
      if (heavy < 0 || size[ch] > size[heavy]) heavy = ch;
    if (heavy >= 0 && 2 * size[heavy] > m)
      c = heavy;
    else
      break;
  }

  struct Comp {
    std::vector<int> nodes;
    int min_label;
  };
  std::vector<Comp> comps;
  for (int ch : t.children[c]) {
    Comp comp;
    detail::collect_subtree(t, ch, comp.nodes);
    comp.min_label = t.labels[*std::min_element(
        comp.nodes.begin(), comp.nodes.end(),
        [&](int a, int b) { return t.labels[a] < t.labels[b]; })];
    comps.push_back(std::move(comp));
  }
  if (c != t.root) {
    std::vector<char> below(m, 0);
    std::vector<int> sub;
    detail::collect_subtree(t, c, sub);
    for (int v : sub) below[v] = 1;
    Comp above;
    for (int v = 0; v < m; ++v)
      if (!below[v]) above.nodes.push_back(v);
    above.min_label = t.labels[above.nodes.front()];
    for (int v : above.nodes) above.min_label = std::min(above.min_label, t.labels[v]);
    comps.push_back(std::move(above));
  }
  std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
    return a.min_label < b.min_label;
  });

  // move whole components to one side until it holds at least floor(n/3)
  // of the non-split vertices; both sides then fit the ceilings
  std::vector<int> side_a = {c}, side_b = {c};
  int packed = 0;
  for (const Comp& comp : comps) {
    if (packed < m / 3) {
      packed += static_cast<int>(comp.nodes.size());
      side_a.insert(side_a.end(), comp.nodes.begin(), comp.nodes.end());
    } else {
      side_b.insert(side_b.end(), comp.nodes.begin(), comp.nodes.end());
    }
  }
  RootedTree ta = detail::subtree_on_nodes(t, side_a, c);
  RootedTree tb = detail::subtree_on_nodes(t, side_b, c);
  if (ta.size() > tb.size() ||
      (ta.size() == tb.size() && tb.labels < ta.labels))
    std::swap(ta, tb);
  return {std::move(ta), std::move(tb)};
}

inline constexpr int kMinDecomposeBudget = 3;

/// Decomposes a tree of at most 6k vertices into at most 13 trees of at most
/// k vertices each, covering every vertex, by recursive splitting.
inline std::vector<RootedTree> decompose_13(const RootedTree& t, int k) {
  if (k < kMinDecomposeBudget)
    throw BudgetTooSmallError("decomposition needs k >= " + std::to_string(kMinDecomposeBudget));
  if (t.size() > 6 * k)
    throw std::invalid_argument("decomposition expects at most 6k vertices");
  std::vector<RootedTree> parts;
  std::function<void(const RootedTree&)> rec = [&](const RootedTree& tree) {
    if (tree.size() <= k) {
      parts.push_back(tree);
      return;
    }
    auto [t1, t2] = jordan_split(tree);
    rec(t1);
    rec(t2);
  };
  rec(t);
  return parts;
}

namespace detail {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;

struct SubtreeDp {
  const RootedTree& t;
  int k;
  // F[v][i]: best profit of a subtree of <= i vertices inside T_v
  // G[v][i]: same but v itself is part of the solution
  // M[v][j][b]: best split of budget b among the first j children of v
  std::vector<std::vector<std::int64_t>> F, G;
  std::vector<std::vector<std::vector<std::int64_t>>> M;

  SubtreeDp(const RootedTree& tree, int budget)
      : t(tree), k(std::min(budget, tree.size())) {
    const int m = t.size();
    F.assign(m, std::vector<std::int64_t>(k + 1, kNegInf));
    G.assign(m, std::vector<std::int64_t>(k + 1, kNegInf));
    M.resize(m);

    std::vector<int> order;
    order.reserve(m);
    order.push_back(t.root);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int c : t.children[order[i]]) order.push_back(c);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      const auto& ch = t.children[v];
      const int l = static_cast<int>(ch.size());
      auto& mv = M[v];
      mv.assign(l + 1, std::vector<std::int64_t>(k, 0));
      for (int j = 1; j <= l; ++j)
        for (int b = 0; b < k; ++b) {
          std::int64_t best = mv[j - 1][b];  // child j excluded
          for (int x = 1; x <= b; ++x)
            best = std::max(best, mv[j - 1][b - x] + G[ch[j - 1]][x]);
          mv[j][b] = best;
        }
      for (int i = 1; i <= k; ++i) {
        G[v][i] = t.profits[v] + mv[l][i - 1];
        std::int64_t f = G[v][i];
        for (int c : ch) f = std::max(f, F[c][i]);
        F[v][i] = f;
      }
    }
  }

  void pick_g(int v, int i, std::vector<int>& chosen) const {
    chosen.push_back(v);
    const auto& ch = t.children[v];
    const auto& mv = M[v];
    int b = i - 1;
    for (int j = static_cast<int>(ch.size()); j >= 1; --j) {
      if (mv[j][b] == mv[j - 1][b]) continue;  // child excluded
      for (int x = 1; x <= b; ++x)
        if (mv[j][b] == mv[j - 1][b - x] + G[ch[j - 1]][x]) {
          pick_g(ch[j - 1], x, chosen);
          b -= x;
          break;
        }
    }
  }

  std::vector<int> best_nodes(int& root_out) const {
    int v = t.root, i = k;
    while (F[v][i] != G[v][i]) {
      for (int c : t.children[v])
        if (F[c][i] == F[v][i]) {
          v = c;
          break;
        }
    }
    root_out = v;
    std::vector<int> chosen;
    pick_g(v, i, chosen);
    return chosen;
  }
};

}  // namespace detail

/// Best connected subtree of at most k vertices by total profit, via the
/// F/G/M recurrences; the answer is F(root, k).
inline RootedTree best_k_subtree(const RootedTree& t, int k) {
  if (k < 1) throw std::invalid_argument("subtree budget must be at least 1");
  detail::SubtreeDp dp(t, k);
  int root_node = 0;
  auto nodes = dp.best_nodes(root_node);
  return detail::subtree_on_nodes(t, nodes, root_node);
}

/// Exhaustive maximum over all connected subtrees of size <= k. Test oracle
/// for the dynamic program; refuses trees beyond 18 vertices.
inline RootedTree brute_best_subtree(const RootedTree& t, int k) {
  if (k < 1) throw std::invalid_argument("subtree budget must be at least 1");
  const int m = t.size();
  if (m > 18) throw TooLargeError("exhaustive subtree search supports at most 18 vertices");

  std::vector<std::uint64_t> adj(m, 0);
  for (int v = 0; v < m; ++v)
    if (t.parent[v] >= 0) {
      adj[v] |= std::uint64_t{1} << t.parent[v];
      adj[t.parent[v]] |= std::uint64_t{1} << v;
    }

  std::uint64_t best_mask = 0;
  std::int64_t best_profit = -1;
  int best_size = 0;
  detail::for_each_connected_subset_mask(adj, m, std::min(k, m), [&](std::uint64_t s) {
    std::int64_t profit = 0;
    for (std::uint64_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      profit += t.profits[v];
    }
    int size = std::popcount(s);
    if (profit > best_profit ||
        (profit == best_profit &&
         (size < best_size ||
          (size == best_size && detail::lex_less_same_size(s, best_mask))))) {
      best_profit = profit;
      best_mask = s;
      best_size = size;
    }
  });

  std::vector<int> nodes;
  for (std::uint64_t rest = best_mask; rest;) {
    nodes.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  return detail::subtree_on_nodes(t, nodes, nodes.front());
}

}  // namespace cds
