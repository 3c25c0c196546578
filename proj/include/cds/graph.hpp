#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "cds/errors.hpp"

namespace cds {

/// A set of vertex ids kept sorted and deduplicated. Comparisons are
/// lexicographic on the sorted id sequence.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  static VertexSet single(int v) { return VertexSet(std::vector<int>{v}); }

  bool contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  void insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  void erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) = default;

 private:
  std::vector<int> ids_;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted,
/// symmetric, and free of self-loops and parallel edges.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  bool has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  std::size_t edge_count() const {
    std::size_t d = 0;
    for (const auto& a : adj) d += a.size();
    return d / 2;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n)
      throw InvalidVertexError("vertex " + std::to_string(v) + " outside [0," +
                               std::to_string(n) + ")");
  }
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidVertexError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") outside [0," + std::to_string(n) + ")");
    if (u == v)
      throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

/// N[v]: the vertex together with its neighbors.
inline VertexSet closed_neighborhood(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<int> ids = g.adj[v];
  ids.push_back(v);
  return VertexSet(std::move(ids));
}

/// N[S] over a whole set.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.n, 0);
  for (int v : s) {
    g.check_vertex(v);
    in[v] = 1;
    for (int u : g.adj[v]) in[u] = 1;
  }
  std::vector<int> ids;
  for (int v = 0; v < g.n; ++v)
    if (in[v]) ids.push_back(v);
  return VertexSet(std::move(ids));
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

/// |N[S]|: how many vertices S dominates.
inline std::int64_t dominated_count(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.n, 0);
  for (int v : s) {
    g.check_vertex(v);
    in[v] = 1;
    for (int u : g.adj[v]) in[u] = 1;
  }
  std::int64_t c = 0;
  for (char b : in) c += b;
  return c;
}

/// True iff the subgraph induced by s is connected. Empty sets and
/// singletons count as connected.
inline bool is_connected_induced(const Graph& g, const VertexSet& s) {
  if (s.size() <= 1) return true;
  std::vector<char> in(g.n, 0), seen(g.n, 0);
  for (int v : s) {
    g.check_vertex(v);
    in[v] = 1;
  }
  std::vector<int> stack = {s.ids().front()};
  seen[stack.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : g.adj[v])
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  return reached == s.size();
}

/// Minimum-hop path from src to dst, endpoints included. Among equal-length
/// paths, predecessors are chosen by smallest vertex id. Empty optional when
/// dst is unreachable.
inline std::optional<std::vector<int>> shortest_path(const Graph& g, int src, int dst) {
  g.check_vertex(src);
  g.check_vertex(dst);
  if (src == dst) return std::vector<int>{src};
  std::vector<int> dist(g.n, -1);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  if (dist[dst] < 0) return std::nullopt;
  std::vector<int> path = {dst};
  int cur = dst;
  while (cur != src) {
    for (int u : g.adj[cur])  // sorted, so the first match is the smallest id
      if (dist[u] == dist[cur] - 1) {
        cur = u;
        break;
      }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Induced subgraph on `verts` (must be sorted unique); vertex i of the
/// result corresponds to verts[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  Graph sub;
  sub.n = static_cast<int>(verts.size());
  sub.adj.assign(sub.n, {});
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int u : g.adj[verts[i]])
      if (pos[u] >= 0) sub.adj[i].push_back(pos[u]);
  return sub;  // adjacency stays sorted because verts and g.adj are
}

namespace detail {

// Closed-neighborhood bitmasks, for the exhaustive engines (n <= 64).
inline std::vector<std::uint64_t> neighborhood_masks(const Graph& g) {
  std::vector<std::uint64_t> m(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    m[v] = std::uint64_t{1} << v;
    for (int u : g.adj[v]) m[v] |= std::uint64_t{1} << u;
  }
  return m;
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> m(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) m[v] |= std::uint64_t{1} << u;
  return m;
}

inline VertexSet set_from_mask(std::uint64_t mask) {
  std::vector<int> ids;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) ids.push_back(v);
  return VertexSet(std::move(ids));
}

inline std::uint64_t mask_from_set(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= std::uint64_t{1} << v;
  return m;
}

// Lexicographic order on equal-size vertex sets given as masks: the set
// owning the smallest differing vertex comes first.
inline bool lex_less_same_size(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (!d) return false;
  return (a >> std::countr_zero(d)) & 1;
}

// Visits every nonempty connected vertex subset of size <= max_size exactly
// once (as a bitmask). Each subset is grown from its smallest vertex; a
// branch that skips an extension bans it for the rest of that branch, which
// is what makes the enumeration duplicate-free.
template <typename Fn>
void for_each_connected_subset_mask(const std::vector<std::uint64_t>& open_adj, int n,
                                    int max_size, Fn&& fn) {
  struct Rec {
    const std::vector<std::uint64_t>& adj;
    int max_size;
    Fn& fn;
    void grow(std::uint64_t s, std::uint64_t nbhd, std::uint64_t banned, int size) {
      fn(s);
      if (size == max_size) return;
      std::uint64_t cand = nbhd & ~s & ~banned;
      while (cand) {
        int u = std::countr_zero(cand);
        std::uint64_t bit = std::uint64_t{1} << u;
        cand &= cand - 1;
        grow(s | bit, nbhd | adj[u], banned, size + 1);
        banned |= bit;
      }
    }
  } rec{open_adj, max_size, fn};
  if (max_size < 1) return;
  for (int s = 0; s < n; ++s) {
    std::uint64_t bit = std::uint64_t{1} << s;
    rec.grow(bit, open_adj[s], bit - 1, 1);  // vertices below the seed are banned
  }
}

}  // namespace detail
}  // namespace cds
