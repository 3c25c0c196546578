#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cds/graph.hpp"
#include "cds/labeling.hpp"
#include "cds/profit.hpp"
#include "cds/qst.hpp"
#include "cds/tree.hpp"

namespace cds {

enum class ProblemKind { pcds, bcds, pgcds, bgcds, lookahead };

enum class GuessStrategy { linear_scan, binary_search };

inline const char* problem_name(ProblemKind p) {
  switch (p) {
    case ProblemKind::pcds: return "pcds";
    case ProblemKind::bcds: return "bcds";
    case ProblemKind::pgcds: return "pgcds";
    case ProblemKind::bgcds: return "bgcds";
    case ProblemKind::lookahead: return "lookahead";
  }
  return "?";
}

inline const char* engine_name(QstEngine e) {
  return e == QstEngine::exact ? "exact" : "heuristic";
}

struct SolutionMeta {
  ProblemKind problem = ProblemKind::pcds;
  SolveMode mode = SolveMode::auto_mode;
  std::int64_t quota_or_budget = 0;
  std::int64_t opt_guess = -1;  // accepted guess, when a guess search ran
  QstEngine engine = QstEngine::exact;
};

/// Final output of every solver: the chosen connected set, the objective
/// recomputed from scratch, the tree behind it, and run metadata.
struct Solution {
  VertexSet chosen;
  std::int64_t objective = 0;
  VertexTree tree;
  SolutionMeta meta;

  int size() const { return static_cast<int>(chosen.size()); }
};

/// Quota used during the budgeted guess search.
inline std::int64_t quota_for_guess(std::int64_t guess) {
  constexpr long double kOneMinusInvE = 1.0L - 0.36787944117144232159L;
  return static_cast<std::int64_t>(std::ceil(kOneMinusInvE * static_cast<long double>(guess)));
}

/// Audited bounds. The partial bounds cap solution size, the budgeted floor
/// guarantees a minimum objective.
inline double pcds_size_bound(int opt_size, int max_deg) {
  double ln_d = max_deg >= 2 ? std::log(static_cast<double>(max_deg)) : 0.0;
  return 2.0 * opt_size * ln_d + opt_size + 2.0;
}

inline double pgcds_size_bound(int opt_size, std::int64_t quota) {
  double ln_q = quota >= 2 ? std::log(static_cast<double>(quota)) : 0.0;
  return 2.0 * opt_size * ln_q + opt_size + 2.0;
}

inline std::int64_t budgeted_objective_floor(std::int64_t opt_objective) {
  constexpr long double kFactor = (1.0L - 0.36787944117144232159L) / 13.0L;
  return static_cast<std::int64_t>(std::ceil(kFactor * static_cast<long double>(opt_objective)));
}

namespace detail {

struct Component {
  Graph sub;
  std::vector<int> verts;  // local id -> global id
};

inline std::vector<Component> split_components(const Graph& g) {
  std::vector<Component> out;
  for (auto& comp : connected_components(g)) {
    Component c;
    c.sub = induced_subgraph(g, comp);
    c.verts = comp;
    out.push_back(std::move(c));
  }
  return out;
}

inline VertexSet to_global(const VertexSet& local, const std::vector<int>& verts) {
  std::vector<int> ids;
  ids.reserve(local.size());
  for (int v : local) ids.push_back(verts[v]);
  return VertexSet(std::move(ids));
}

inline VertexTree to_global(const VertexTree& local, const std::vector<int>& verts) {
  VertexTree t;
  t.vertices = to_global(local.vertices, verts);
  t.root = local.root >= 0 ? verts[local.root] : -1;
  t.edges.reserve(local.edges.size());
  for (auto [u, v] : local.edges) t.edges.emplace_back(verts[u], verts[v]);
  return t;
}

inline Solution single_vertex_solution(const Graph& g, int v, ProblemKind problem, SolveMode mode,
                                       std::int64_t quota_or_budget, std::int64_t objective) {
  Solution s;
  s.chosen = VertexSet::single(v);
  s.objective = objective;
  s.tree = spanning_tree(g, s.chosen);
  s.meta = {problem, mode, quota_or_budget, -1, resolve_engine(mode, g.n)};
  return s;
}

// Guess search shared by the budgeted solvers: walk candidate guesses from
// high to low and accept the first whose quota tree exists (exact engine) or
// stays within 6k vertices (heuristic engine).
struct GuessOutcome {
  QstResult qst;
  std::int64_t guess = -1;
};

template <typename TryGuess>
std::optional<GuessOutcome> scan_guesses_linear(std::int64_t high, std::int64_t low,
                                                std::int64_t step, TryGuess&& try_guess) {
  std::int64_t g = high;
  while (true) {
    if (auto r = try_guess(g)) return GuessOutcome{std::move(*r), g};
    if (g == low) break;
    g = std::max(low, g - step);
  }
  return std::nullopt;
}

template <typename TryGuess>
std::optional<GuessOutcome> scan_guesses_binary(std::int64_t high, std::int64_t low,
                                                TryGuess&& try_guess) {
  // assumes feasibility is monotone in the guess; kept behind a flag
  std::optional<GuessOutcome> best;
  while (low <= high) {
    std::int64_t mid = low + (high - low + 1) / 2;
    if (auto r = try_guess(mid)) {
      best = GuessOutcome{std::move(*r), mid};
      low = mid + 1;
    } else {
      high = mid - 1;
    }
    if (low > high) break;
  }
  return best;
}

}  // namespace detail

/// Partial CDS: greedy profit labeling, then a quota tree at the requested
/// coverage. Empty optional when the quota is unreachable.
inline std::optional<Solution> solve_pcds(const Graph& g, std::int64_t quota, SolveMode mode) {
  if (quota < 0) throw std::invalid_argument("quota must be nonnegative");
  if (quota > g.n) return std::nullopt;
  if (quota == 0) {
    auto s = detail::single_vertex_solution(g, 0, ProblemKind::pcds, mode, quota, 0);
    s.objective = dominated_count(g, s.chosen);
    return s;
  }

  std::optional<Solution> best;
  for (auto& comp : detail::split_components(g)) {
    Labeling lab = greedy_dominating_set(comp.sub);
    auto r = qst_solve(comp.sub, lab.profit, quota, mode);
    if (!r) continue;
    Solution s;
    s.tree = detail::to_global(r->tree, comp.verts);
    s.chosen = s.tree.vertices;
    s.objective = dominated_count(g, s.chosen);
    s.meta = {ProblemKind::pcds, mode, quota, -1, r->engine};
    if (!best || s.size() < best->size()) best = std::move(s);
  }
  return best;
}

namespace detail {

inline Solution bcds_component(const Graph& sub, int k, SolveMode mode, GuessStrategy strategy) {
  Labeling lab = greedy_dominating_set(sub);
  auto try_guess = [&](std::int64_t guess) -> std::optional<QstResult> {
    auto r = qst_solve(sub, lab.profit, quota_for_guess(guess), mode);
    if (!r) return std::nullopt;
    if (r->engine == QstEngine::heuristic && r->tree.size() > 6 * k) return std::nullopt;
    return r;
  };
  auto outcome = strategy == GuessStrategy::linear_scan
                     ? scan_guesses_linear(sub.n, std::min<std::int64_t>(k, sub.n), 1, try_guess)
                     : scan_guesses_binary(sub.n, std::min<std::int64_t>(k, sub.n), try_guess);

  Solution s;
  if (outcome) {
    RootedTree rooted = rooted_from_vertex_tree(outcome->qst.tree, lab.profit);
    RootedTree sub_tree = best_k_subtree(rooted, k);
    s.chosen = sub_tree.label_set();
    s.tree = spanning_tree(sub, s.chosen);
    s.meta = {ProblemKind::bcds, mode, k, outcome->guess, outcome->qst.engine};
  } else {
    // no acceptable guess tree (possible with the heuristic engine only):
    // fall back to the best single closed neighborhood
    int pick = 0;
    for (int v = 1; v < sub.n; ++v)
      if (dominated_count(sub, VertexSet::single(v)) >
          dominated_count(sub, VertexSet::single(pick)))
        pick = v;
    s.chosen = VertexSet::single(pick);
    s.tree = spanning_tree(sub, s.chosen);
    s.meta = {ProblemKind::bcds, mode, k, -1, resolve_engine(mode, sub.n)};
  }
  s.objective = dominated_count(sub, s.chosen);
  return s;
}

}  // namespace detail

/// Budgeted CDS: guess the optimum coverage from above, take the quota tree
/// at (1-1/e) of the guess, then the best k-subtree of it.
inline Solution solve_bcds(const Graph& g, int k, SolveMode mode,
                           GuessStrategy strategy = GuessStrategy::linear_scan) {
  if (k < 1) throw std::invalid_argument("budget must be at least 1");
  k = std::min(k, g.n);
  std::optional<Solution> best;
  for (auto& comp : detail::split_components(g)) {
    int kc = std::min(k, comp.sub.n);
    Solution local = detail::bcds_component(comp.sub, kc, mode, strategy);
    Solution s;
    s.chosen = detail::to_global(local.chosen, comp.verts);
    s.tree = detail::to_global(local.tree, comp.verts);
    s.objective = local.objective;
    s.meta = local.meta;
    s.meta.quota_or_budget = k;
    if (!best || s.objective > best->objective) best = std::move(s);
  }
  return *best;
}

/// Budgeted generalized CDS over a special submodular profit function.
inline Solution solve_bgcds(const Graph& g, const ProfitFn& f, int k, SolveMode mode,
                            GuessStrategy strategy = GuessStrategy::linear_scan) {
  if (k < 1) throw std::invalid_argument("budget must be at least 1");
  k = std::min(k, g.n);
  std::optional<Solution> best;
  for (auto& comp : detail::split_components(g)) {
    int kc = std::min(k, comp.sub.n);
    ProfitFn fc = remapped(f, comp.verts);
    Labeling lab = generalized_greedy(comp.sub, fc);
    std::int64_t f_total = lab.total_profit();
    std::int64_t step = std::max<std::int64_t>(1, f_total / std::max(comp.sub.n, 1));

    auto try_guess = [&](std::int64_t guess) -> std::optional<QstResult> {
      auto r = qst_solve(comp.sub, lab.profit, quota_for_guess(guess), mode);
      if (!r) return std::nullopt;
      if (r->engine == QstEngine::heuristic && r->tree.size() > 6 * kc) return std::nullopt;
      return r;
    };
    auto outcome = strategy == GuessStrategy::linear_scan
                       ? detail::scan_guesses_linear(f_total, 0, step, try_guess)
                       : detail::scan_guesses_binary(f_total, 0, try_guess);
    // guess 0 asks for quota 0, which a single vertex always meets
    if (!outcome) outcome = detail::GuessOutcome{*try_guess(0), 0};
    RootedTree rooted = rooted_from_vertex_tree(outcome->qst.tree, lab.profit);
    RootedTree sub_tree = best_k_subtree(rooted, kc);

    Solution s;
    s.chosen = detail::to_global(sub_tree.label_set(), comp.verts);
    s.tree = detail::to_global(spanning_tree(comp.sub, sub_tree.label_set()), comp.verts);
    s.objective = f.eval(s.chosen);
    s.meta = {ProblemKind::bgcds, mode, k, outcome->guess, outcome->qst.engine};
    if (!best || s.objective > best->objective) best = std::move(s);
  }
  return *best;
}

/// Partial generalized CDS: quota tree directly at the requested f-value.
inline std::optional<Solution> solve_pgcds(const Graph& g, const ProfitFn& f, std::int64_t quota,
                                           SolveMode mode) {
  if (quota < 0) throw std::invalid_argument("quota must be nonnegative");
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  if (quota > f.eval(VertexSet(all))) return std::nullopt;
  if (quota == 0) {
    auto s = detail::single_vertex_solution(g, 0, ProblemKind::pgcds, mode, quota, 0);
    s.objective = f.eval(s.chosen);
    return s;
  }

  std::optional<Solution> best;
  for (auto& comp : detail::split_components(g)) {
    ProfitFn fc = remapped(f, comp.verts);
    Labeling lab = generalized_greedy(comp.sub, fc);
    auto r = qst_solve(comp.sub, lab.profit, quota, mode);
    if (!r) continue;
    Solution s;
    s.tree = detail::to_global(r->tree, comp.verts);
    s.chosen = s.tree.vertices;
    s.objective = f.eval(s.chosen);
    s.meta = {ProblemKind::pgcds, mode, quota, -1, r->engine};
    if (!best || s.size() < best->size()) best = std::move(s);
  }
  return best;
}

/// The c-step look-ahead greedy baseline: repeatedly append the path of at
/// most c new vertices that dominates the most new vertices. No guarantee;
/// kept as the adversarial comparator.
inline Solution lookahead_greedy_bcds(const Graph& g, int k, int c) {
  if (k < 1 || c < 1) throw std::invalid_argument("lookahead needs k >= 1 and c >= 1");
  k = std::min(k, g.n);

  std::vector<char> in_set(g.n, 0), covered(g.n, 0);
  std::vector<int> chosen_order;

  struct Candidate {
    int gain = -1;
    std::vector<int> path;

    bool better_than(const Candidate& other) const {
      if (gain != other.gain) return gain > other.gain;
      if (path.size() != other.path.size()) return path.size() < other.path.size();
      return path < other.path;
    }
  };

  // gain of a path = vertices its closed neighborhood newly dominates
  std::vector<int> touch_epoch(g.n, -1);
  int epoch = 0;
  auto path_gain = [&](const std::vector<int>& path) {
    ++epoch;
    int gain = 0;
    auto touch = [&](int u) {
      if (!covered[u] && touch_epoch[u] != epoch) {
        touch_epoch[u] = epoch;
        ++gain;
      }
    };
    for (int v : path) {
      touch(v);
      for (int u : g.adj[v]) touch(u);
    }
    return gain;
  };

  while (static_cast<int>(chosen_order.size()) < k) {
    int max_len = std::min(c, k - static_cast<int>(chosen_order.size()));
    Candidate best;

    std::vector<int> path;
    std::function<void(int)> extend = [&](int v) {
      path.push_back(v);
      Candidate cand{path_gain(path), path};
      if (cand.better_than(best)) best = std::move(cand);
      if (static_cast<int>(path.size()) < max_len)
        for (int u : g.adj[v])
          if (!in_set[u] && std::find(path.begin(), path.end(), u) == path.end()) extend(u);
      path.pop_back();
    };

    if (chosen_order.empty()) {
      for (int v = 0; v < g.n; ++v) extend(v);
    } else {
      std::vector<char> is_start(g.n, 0);
      for (int v : chosen_order)
        for (int u : g.adj[v])
          if (!in_set[u]) is_start[u] = 1;
      for (int v = 0; v < g.n; ++v)
        if (is_start[v]) extend(v);
    }

    if (best.gain <= 0) break;
    for (int v : best.path) {
      in_set[v] = 1;
      chosen_order.push_back(v);
      covered[v] = 1;
      for (int u : g.adj[v]) covered[u] = 1;
    }
  }

  Solution s;
  s.chosen = VertexSet(chosen_order);
  s.objective = dominated_count(g, s.chosen);
  s.tree = spanning_tree(g, s.chosen);
  s.meta = {ProblemKind::lookahead, SolveMode::exact, k, c, QstEngine::exact};
  return s;
}

}  // namespace cds
