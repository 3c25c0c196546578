#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cds/graph.hpp"

namespace cds {

/// A problem instance: graph plus optional per-vertex weights/capacities.
struct Instance {
  Graph graph;
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<std::vector<int>> capacities;
  std::string label;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph.n == b.graph.n && a.graph.adj == b.graph.adj && a.weights == b.weights &&
           a.capacities == b.capacities && a.label == b.label;
  }
};

namespace detail {

// Deterministic uniform double in [0,1) from the top 53 bits.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Instance largest_component_instance(const Graph& g, std::string label) {
  auto comps = connected_components(g);
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;
  Instance inst;
  inst.graph = induced_subgraph(g, comps[best]);
  inst.label = std::move(label);
  return inst;
}

}  // namespace detail

/// The adversarial spider family: `heads` high-degree vertices joined in a
/// chain by paths of path_len internal vertices (path_len+1 edges), each
/// head carrying leg_count legs of leg_len vertices. Numbering: heads first,
/// then connector internals in chain order, then legs head by head.
inline Instance gen_spider(int heads, int path_len, int leg_count, int leg_len = 1) {
  if (heads < 2 || path_len < 1 || leg_count < 1 || leg_len < 1)
    throw std::invalid_argument("spider needs heads >= 2, path_len >= 1, legs >= 1, leg_len >= 1");
  int n = heads + (heads - 1) * path_len + heads * leg_count * leg_len;
  std::vector<std::pair<int, int>> edges;
  int next = heads;
  for (int h = 0; h + 1 < heads; ++h) {
    int prev = h;
    for (int i = 0; i < path_len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, h + 1);
  }
  for (int h = 0; h < heads; ++h)
    for (int leg = 0; leg < leg_count; ++leg) {
      int prev = h;
      for (int i = 0; i < leg_len; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
    }
  Instance inst;
  inst.graph = from_edge_list(n, edges);
  char label[64];
  std::snprintf(label, sizeof label, "spider-h%d-c%d-m%d-l%d", heads, path_len, leg_count,
                leg_len);
  inst.label = label;
  return inst;
}

/// Erdos-Renyi sample; the largest component is relabelled 0..n'-1.
inline Instance gen_gnp(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1 || edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("gnp needs n >= 1 and p in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (detail::unit_double(rng) < edge_prob) edges.emplace_back(u, v);
  char label[64];
  std::snprintf(label, sizeof label, "gnp-n%d-p%g-s%llu", n, edge_prob,
                static_cast<unsigned long long>(seed));
  return detail::largest_component_instance(from_edge_list(n, edges), label);
}

/// Random points in the unit square, edges within Euclidean distance
/// `radius`; the largest component is kept.
inline Instance gen_unit_disk(int n, double radius, std::uint64_t seed) {
  if (n < 1 || radius <= 0.0) throw std::invalid_argument("unit disk needs n >= 1 and radius > 0");
  std::mt19937_64 rng(seed);
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = detail::unit_double(rng);
    y[i] = detail::unit_double(rng);
  }
  std::vector<std::pair<int, int>> edges;
  double r2 = radius * radius;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double dx = x[u] - x[v], dy = y[u] - y[v];
      if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
    }
  char label[64];
  std::snprintf(label, sizeof label, "unitdisk-n%d-r%g-s%llu", n, radius,
                static_cast<unsigned long long>(seed));
  return detail::largest_component_instance(from_edge_list(n, edges), label);
}

// ---------------------------------------------------------------------------
// Text formats.
//
// Instance ("cds" format, line oriented, diff friendly):
//   # <label>                 optional, must precede the header
//   cds 1 <n> <m> <flags>     flags: "-" or any of "w","c" (e.g. "wc")
//   e <u> <v>                 m edge lines
//   w <v> <value>             n lines when the w flag is set
//   c <v> <value>             n lines when the c flag is set
//
// Solution:
//   sol <objective> <size>
//   v <id>                    size lines, ascending
//   e <u> <v>                 tree edges

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  if (!inst.label.empty()) out << "# " << inst.label << "\n";
  std::string flags;
  if (inst.weights) flags += 'w';
  if (inst.capacities) flags += 'c';
  if (flags.empty()) flags = "-";
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < inst.graph.n; ++u)
    for (int v : inst.graph.adj[u])
      if (u < v) edges.emplace_back(u, v);
  out << "cds 1 " << inst.graph.n << " " << edges.size() << " " << flags << "\n";
  for (auto [u, v] : edges) out << "e " << u << " " << v << "\n";
  if (inst.weights)
    for (int v = 0; v < inst.graph.n; ++v) out << "w " << v << " " << (*inst.weights)[v] << "\n";
  if (inst.capacities)
    for (int v = 0; v < inst.graph.n; ++v) out << "c " << v << " " << (*inst.capacities)[v] << "\n";
  return out.str();
}

inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  Instance inst;

  int n = -1;
  long m = -1;
  std::string flags;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> weights;
  std::vector<int> caps;
  std::vector<char> have_w, have_c;
  long seen_w = 0, seen_c = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (n < 0 && inst.label.empty()) {
        std::size_t start = line.find_first_not_of("# \t");
        if (start != std::string::npos) inst.label = line.substr(start);
      }
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (n < 0) {
      int version;
      if (tag != "cds" || !(ls >> version >> n >> m >> flags) || version != 1 || n < 1 || m < 0)
        throw ParseError("expected header 'cds 1 <n> <m> <flags>'", line_no);
      if (flags != "-")
        for (char f : flags)
          if (f != 'w' && f != 'c') throw ParseError("unknown flag '" + std::string(1, f) + "'", line_no);
      weights.assign(n, 0);
      caps.assign(n, 0);
      have_w.assign(n, 0);
      have_c.assign(n, 0);
      continue;
    }
    if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line", line_no);
      if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range", line_no);
      if (u == v) throw ParseError("self-loop", line_no);
      edges.emplace_back(u, v);
    } else if (tag == "w") {
      int v;
      std::int64_t val;
      if (!(ls >> v >> val)) throw ParseError("malformed weight line", line_no);
      if (v < 0 || v >= n) throw ParseError("weight vertex out of range", line_no);
      if (val < 0) throw ParseError("negative weight", line_no);
      weights[v] = val;
      have_w[v] = 1;
      ++seen_w;
    } else if (tag == "c") {
      int v, val;
      if (!(ls >> v >> val)) throw ParseError("malformed capacity line", line_no);
      if (v < 0 || v >= n) throw ParseError("capacity vertex out of range", line_no);
      if (val < 0) throw ParseError("negative capacity", line_no);
      caps[v] = val;
      have_c[v] = 1;
      ++seen_c;
    } else {
      throw ParseError("unknown line tag '" + tag + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing header", line_no + 1);
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no + 1);
  bool want_w = flags.find('w') != std::string::npos;
  bool want_c = flags.find('c') != std::string::npos;
  bool all_w = std::all_of(have_w.begin(), have_w.end(), [](char b) { return b != 0; });
  bool all_c = std::all_of(have_c.begin(), have_c.end(), [](char b) { return b != 0; });
  if (want_w && !all_w) throw ParseError("header declares weights but lines are missing", line_no + 1);
  if (!want_w && seen_w > 0) throw ParseError("weight lines present without the w flag", line_no + 1);
  if (want_c && !all_c) throw ParseError("header declares capacities but lines are missing", line_no + 1);
  if (!want_c && seen_c > 0) throw ParseError("capacity lines present without the c flag", line_no + 1);

  inst.graph = from_edge_list(n, edges);
  if (want_w) inst.weights = std::move(weights);
  if (want_c) inst.capacities = std::move(caps);
  return inst;
}

/// Minimal compatibility reader: one "u v" pair per line, ids 0-based,
/// vertex count inferred from the largest id. Comment lines (#) and the
/// DIMACS-ish "c"/"p" prefixes are skipped.
inline Instance parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line[0] == 'c' || line[0] == 'p') continue;
    std::istringstream ls(line);
    long u, v;
    if (line[0] == 'e') {
      char tag;
      if (!(ls >> tag >> u >> v)) throw ParseError("malformed edge line", line_no);
    } else if (!(ls >> u >> v)) {
      throw ParseError("expected 'u v' pair", line_no);
    }
    if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    n = std::max({n, static_cast<int>(u) + 1, static_cast<int>(v) + 1});
  }
  if (edges.empty()) throw ParseError("no edges found", line_no + 1);
  Instance inst;
  inst.graph = from_edge_list(n, edges);
  return inst;
}

/// What a solution file carries: enough to re-verify independently.
struct SolutionRecord {
  std::int64_t objective = 0;
  VertexSet chosen;
  std::vector<std::pair<int, int>> tree_edges;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

inline std::string serialize_solution(const SolutionRecord& sol) {
  std::ostringstream out;
  out << "sol " << sol.objective << " " << sol.chosen.size() << "\n";
  for (int v : sol.chosen) out << "v " << v << "\n";
  auto edges = sol.tree_edges;
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out << "e " << u << " " << v << "\n";
  return out.str();
}

inline SolutionRecord parse_solution(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  SolutionRecord sol;
  long declared = -1;
  std::vector<int> verts;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (declared < 0) {
      if (tag != "sol" || !(ls >> sol.objective >> declared) || declared < 0)
        throw ParseError("expected header 'sol <objective> <size>'", line_no);
      continue;
    }
    if (tag == "v") {
      int v;
      if (!(ls >> v)) throw ParseError("malformed vertex line", line_no);
      verts.push_back(v);
    } else if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line", line_no);
      sol.tree_edges.emplace_back(u, v);
    } else {
      throw ParseError("unknown line tag '" + tag + "'", line_no);
    }
  }
  if (declared < 0) throw ParseError("missing header", line_no + 1);
  if (static_cast<long>(verts.size()) != declared)
    throw ParseError("header declares " + std::to_string(declared) + " vertices, found " +
                         std::to_string(verts.size()),
                     line_no + 1);
  sol.chosen = VertexSet(std::move(verts));
  return sol;
}

}  // namespace cds
