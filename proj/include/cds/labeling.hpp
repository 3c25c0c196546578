#pragma once

#include <cstdint>
#include <vector>

#include "cds/graph.hpp"
#include "cds/profit.hpp"

namespace cds {

/// Output of the greedy first phase: the chosen vertices in pick order and
/// the marginal profit each one earned at pick time (zero elsewhere).
struct Labeling {
  std::vector<int> order;
  std::vector<std::int64_t> profit;        // indexed by vertex id
  std::vector<VertexSet> cover_sets;       // parallel to order; domination variant only

  std::int64_t total_profit() const {
    std::int64_t t = 0;
    for (std::int64_t p : profit) t += p;
    return t;
  }
};

/// Greedy dominating set: while undominated vertices remain, pick the vertex
/// covering the most of them (ties to the smallest id), record the newly
/// covered set C_v and its size as the profit p(v). The C_v partition V.
inline Labeling greedy_dominating_set(const Graph& g) {
  Labeling lab;
  lab.profit.assign(g.n, 0);
  std::vector<char> undominated(g.n, 1), chosen(g.n, 0);
  int remaining = g.n;
  while (remaining > 0) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < g.n; ++v) {
      if (chosen[v]) continue;
      int gain = undominated[v];
      for (int u : g.adj[v]) gain += undominated[u];
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    std::vector<int> covered;
    if (undominated[best]) covered.push_back(best);
    for (int u : g.adj[best])
      if (undominated[u]) covered.push_back(u);
    for (int u : covered) undominated[u] = 0;
    remaining -= static_cast<int>(covered.size());
    chosen[best] = 1;
    lab.order.push_back(best);
    lab.profit[best] = static_cast<std::int64_t>(covered.size());
    lab.cover_sets.emplace_back(std::move(covered));
  }
  return lab;
}

/// Generalized greedy: repeatedly pick the vertex of maximum marginal profit
/// until f(D) = f(V). Profits record the marginal at pick time.
inline Labeling generalized_greedy(const Graph& g, const ProfitFn& f) {
  Labeling lab;
  lab.profit.assign(g.n, 0);
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  const std::int64_t target = f.eval(VertexSet(all));

  VertexSet d;
  std::int64_t value = f.eval(d);
  if (value != 0)
    throw NonmonotoneProfitError("f(empty) = " + std::to_string(value) + ", expected 0");
  std::vector<char> chosen(g.n, 0);
  while (value != target) {
    int best = -1;
    std::int64_t best_gain = -1;
    for (int v = 0; v < g.n; ++v) {
      if (chosen[v]) continue;
      std::int64_t gain = f.marginal(d, v);
      if (gain < 0)
        throw NonmonotoneProfitError("negative marginal " + std::to_string(gain) +
                                     " at vertex " + std::to_string(v));
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0 || best_gain <= 0)
      throw NonmonotoneProfitError("no positive marginal although f(D) < f(V)");
    d.insert(best);
    chosen[best] = 1;
    value += best_gain;
    lab.order.push_back(best);
    lab.profit[best] = best_gain;
  }
  return lab;
}

}  // namespace cds
