#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cds/graph.hpp"
#include "cds/matching.hpp"

namespace cds {

/// A monotone integral profit function over vertex sets, with f(empty) = 0.
/// Marginals are derived from point evaluation, so the defining identity
/// marginal(A, v) = eval(A + v) - eval(A) holds by construction.
class ProfitFn {
 public:
  enum class Kind { domination, weighted, capacitated };

  ProfitFn(Kind kind, std::function<std::int64_t(const VertexSet&)> eval)
      : kind_(kind), eval_(std::move(eval)) {}

  std::int64_t eval(const VertexSet& s) const { return eval_(s); }
  std::int64_t operator()(const VertexSet& s) const { return eval_(s); }

  std::int64_t marginal(const VertexSet& s, int v) const {
    if (s.contains(v)) return 0;
    VertexSet sv = s;
    sv.insert(v);
    return eval_(sv) - eval_(s);
  }

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
  std::function<std::int64_t(const VertexSet&)> eval_;
};

/// f(S) = number of vertices dominated by S, i.e. |N[S]|.
inline ProfitFn domination_count(const Graph& g) {
  auto adj = g.adj;  // own a copy so the profile cannot dangle
  int n = g.n;
  return ProfitFn(ProfitFn::Kind::domination, [adj, n](const VertexSet& s) -> std::int64_t {
    std::vector<char> in(n, 0);
    for (int v : s) {
      in[v] = 1;
      for (int u : adj[v]) in[u] = 1;
    }
    std::int64_t c = 0;
    for (char b : in) c += b;
    return c;
  });
}

/// f(S) = total weight of vertices dominated by S.
inline ProfitFn weighted_domination(const Graph& g, const std::vector<std::int64_t>& w) {
  auto adj = g.adj;
  int n = g.n;
  return ProfitFn(ProfitFn::Kind::weighted, [adj, n, w](const VertexSet& s) -> std::int64_t {
    std::vector<char> in(n, 0);
    for (int v : s) {
      in[v] = 1;
      for (int u : adj[v]) in[u] = 1;
    }
    std::int64_t c = 0;
    for (int v = 0; v < n; ++v)
      if (in[v]) c += w[v];
    return c;
  });
}

/// f(S) = maximum number of distinct vertices assignable to members of S,
/// where v in S accepts only vertices of N[v] and at most cap(v) of them.
/// Computed exactly by maximum bipartite matching.
inline ProfitFn capacitated_domination(const Graph& g, const std::vector<int>& cap) {
  auto adj = g.adj;
  int n = g.n;
  return ProfitFn(ProfitFn::Kind::capacitated, [adj, n, cap](const VertexSet& s) -> std::int64_t {
    if (s.empty()) return 0;
    std::vector<int> caps;
    std::vector<char> candidate(n, 0);
    caps.reserve(s.size());
    for (int v : s) {
      // a vertex can never dominate more than its closed neighborhood
      caps.push_back(std::min<int>(cap[v], static_cast<int>(adj[v].size()) + 1));
      candidate[v] = 1;
      for (int u : adj[v]) candidate[u] = 1;
    }
    std::vector<int> cand_ids;
    std::vector<int> cand_pos(n, -1);
    for (int v = 0; v < n; ++v)
      if (candidate[v]) {
        cand_pos[v] = static_cast<int>(cand_ids.size());
        cand_ids.push_back(v);
      }
    std::vector<std::vector<int>> edges(cand_ids.size());
    int hi = 0;
    for (int v : s) {
      edges[cand_pos[v]].push_back(hi);
      for (int u : adj[v]) edges[cand_pos[u]].push_back(hi);
      ++hi;
    }
    detail::SlotMatcher matcher(caps);
    return matcher.solve(edges);
  });
}

/// Same profile evaluated through an id map: local vertex i stands for
/// verts[i]. Used when solving per connected component.
inline ProfitFn remapped(const ProfitFn& f, std::vector<int> verts) {
  return ProfitFn(f.kind(), [f, verts = std::move(verts)](const VertexSet& s) {
    std::vector<int> global;
    global.reserve(s.size());
    for (int v : s) global.push_back(verts[v]);
    return f.eval(VertexSet(std::move(global)));
  });
}

// ---------------------------------------------------------------------------
// Randomized / exhaustive checker for the two defining axioms:
//   (1) submodularity: A <= B  =>  f_A(v) >= f_B(v)
//   (2) locality: N[X] and N[B] disjoint  =>  f_A(X) = f_{A u B}(X)
// Violations are data, not errors.

struct AxiomViolation {
  int axiom;  // 1 or 2
  VertexSet a, b, x;
  int vertex = -1;  // axiom 1 only
  std::int64_t lhs = 0, rhs = 0;

  std::string describe() const;
};

struct SubmodularityReport {
  std::vector<AxiomViolation> violations;
  bool exhaustive = false;
  long cases_checked = 0;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::vector<std::int64_t> eval_table(const ProfitFn& f, int n) {
  std::vector<std::int64_t> tab(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < tab.size(); ++m) tab[m] = f.eval(set_from_mask(m));
  return tab;
}

inline std::uint64_t closed_mask(const std::vector<std::uint64_t>& nbr, std::uint64_t s) {
  std::uint64_t out = 0;
  for (int v = 0; s; ++v, s >>= 1)
    if (s & 1) out |= nbr[v];
  return out;
}

}  // namespace detail

inline SubmodularityReport check_special_submodular(const ProfitFn& f, const Graph& g,
                                                    int trials, unsigned seed) {
  SubmodularityReport rep;
  const int n = g.n;
  auto nbr = detail::neighborhood_masks(g);

  auto record1 = [&](std::uint64_t a, std::uint64_t b, int v, std::int64_t lhs, std::int64_t rhs) {
    rep.violations.push_back({1, detail::set_from_mask(a), detail::set_from_mask(b),
                              VertexSet{}, v, lhs, rhs});
  };
  auto record2 = [&](std::uint64_t a, std::uint64_t b, std::uint64_t x, std::int64_t lhs,
                     std::int64_t rhs) {
    rep.violations.push_back({2, detail::set_from_mask(a), detail::set_from_mask(b),
                              detail::set_from_mask(x), -1, lhs, rhs});
  };

  if (n <= 8) {
    rep.exhaustive = true;
    auto tab = detail::eval_table(f, n);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    // axiom 1 over all A subset-of B and all v
    for (std::uint64_t b = 0; b <= full; ++b) {
      for (std::uint64_t a = b;; a = (a - 1) & b) {
        for (int v = 0; v < n; ++v) {
          std::uint64_t bit = std::uint64_t{1} << v;
          std::int64_t da = tab[a | bit] - tab[a];
          std::int64_t db = tab[b | bit] - tab[b];
          ++rep.cases_checked;
          if (da < db) record1(a, b, v, da, db);
        }
        if (a == 0) break;
      }
    }
    // axiom 2 over all (X, B) with disjoint closed neighborhoods, all A
    std::vector<std::uint64_t> nmask(full + 1);
    for (std::uint64_t m = 0; m <= full; ++m) nmask[m] = detail::closed_mask(nbr, m);
    for (std::uint64_t x = 0; x <= full; ++x)
      for (std::uint64_t b = 0; b <= full; ++b) {
        if (nmask[x] & nmask[b]) continue;
        for (std::uint64_t a = 0; a <= full; ++a) {
          std::int64_t lhs = tab[a | x] - tab[a];
          std::int64_t rhs = tab[a | b | x] - tab[a | b];
          ++rep.cases_checked;
          if (lhs != rhs) record2(a, b, x, lhs, rhs);
        }
      }
    return rep;
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto rand_mask = [&] { return rng() & full; };
  auto eval_mask = [&](std::uint64_t m) { return f.eval(detail::set_from_mask(m)); };

  for (int t = 0; t < trials; ++t) {
    // axiom 1
    std::uint64_t b = rand_mask();
    std::uint64_t a = rand_mask() & b;
    int v = static_cast<int>(rng() % n);
    std::uint64_t bit = std::uint64_t{1} << v;
    std::int64_t da = eval_mask(a | bit) - eval_mask(a);
    std::int64_t db = eval_mask(b | bit) - eval_mask(b);
    ++rep.cases_checked;
    if (da < db) record1(a, b, v, da, db);

    // axiom 2: draw X, then B among vertices whose closed neighborhood
    // avoids N[X], then arbitrary A
    std::uint64_t x = rand_mask();
    std::uint64_t nx = detail::closed_mask(nbr, x);
    std::uint64_t allowed = 0;
    for (int u = 0; u < n; ++u)
      if (!(nbr[u] & nx)) allowed |= std::uint64_t{1} << u;
    std::uint64_t bb = rand_mask() & allowed;
    std::uint64_t aa = rand_mask();
    std::int64_t lhs = eval_mask(aa | x) - eval_mask(aa);
    std::int64_t rhs = eval_mask(aa | bb | x) - eval_mask(aa | bb);
    ++rep.cases_checked;
    if (lhs != rhs) record2(aa, bb, x, lhs, rhs);
  }
  return rep;
}

inline std::string AxiomViolation::describe() const {
  auto join = [](const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.ids().size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s.ids()[i]);
    }
    return out + "}";
  };
  if (axiom == 1)
    return "axiom1 A=" + join(a) + " B=" + join(b) + " v=" + std::to_string(vertex) +
           " fA(v)=" + std::to_string(lhs) + " < fB(v)=" + std::to_string(rhs);
  return "axiom2 A=" + join(a) + " B=" + join(b) + " X=" + join(x) +
         " fA(X)=" + std::to_string(lhs) + " != fAB(X)=" + std::to_string(rhs);
}

}  // namespace cds
