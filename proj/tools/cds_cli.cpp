// Command-line front end: instance generation, the four solvers, exhaustive
// oracles, an independent solution verifier, a tree-decomposition demo, and
// the benchmark harness.
//
// Exit codes: 0 ok, 2 usage, 3 infeasible, 4 verification violation,
// 5 size-cap refusal.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cds/instance.hpp"
#include "cds/oracles.hpp"
#include "cds/pipelines.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitViolation = 4;
constexpr int kExitTooLarge = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

cds::SolveMode parse_mode(const std::string& mode) {
  if (mode == "exact") return cds::SolveMode::exact;
  if (mode == "heuristic") return cds::SolveMode::heuristic;
  return cds::SolveMode::auto_mode;
}

cds::Instance load_instance(const std::string& path, bool edgelist) {
  std::string text = read_file(path);
  return edgelist ? cds::parse_edge_list(text) : cds::parse_instance(text);
}

// Profile selection shared by solve/oracle/bench. "dom" needs nothing,
// "weighted" needs w lines, "capacitated" needs c lines.
cds::ProfitFn profile_fn(const std::string& profile, const cds::Instance& inst) {
  if (profile == "weighted") {
    if (!inst.weights) throw std::runtime_error("instance carries no weights");
    return cds::weighted_domination(inst.graph, *inst.weights);
  }
  if (profile == "capacitated") {
    if (!inst.capacities) throw std::runtime_error("instance carries no capacities");
    return cds::capacitated_domination(inst.graph, *inst.capacities);
  }
  return cds::domination_count(inst.graph);
}

std::optional<cds::OracleCache> cache_from_env() {
  const char* dir = std::getenv("CDS_ORACLE_CACHE");
  if (!dir || !*dir) return std::nullopt;
  return cds::OracleCache(dir);
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  int heads = 4, c = 2, legs = 5, leglen = 1;
  int n = 10;
  double p = 0.3, r = 0.25;
  std::uint64_t seed = 1;
  int wmax = -1, cmin = -1, cmax = -1;
  std::string out;
};

void attach_vectors(cds::Instance& inst, const GenArgs& a) {
  std::mt19937_64 rng(a.seed ^ 0x9e3779b97f4a7c15ull);
  if (a.wmax >= 0) {
    std::vector<std::int64_t> w(inst.graph.n);
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % (a.wmax + 1));
    inst.weights = std::move(w);
  }
  if (a.cmin >= 1 && a.cmax >= a.cmin) {
    std::vector<int> c(inst.graph.n);
    for (auto& x : c) x = a.cmin + static_cast<int>(rng() % (a.cmax - a.cmin + 1));
    inst.capacities = std::move(c);
  }
}

int run_gen(const std::string& kind, const GenArgs& a) {
  cds::Instance inst;
  if (kind == "spider")
    inst = cds::gen_spider(a.heads, a.c, a.legs, a.leglen);
  else if (kind == "gnp")
    inst = cds::gen_gnp(a.n, a.p, a.seed);
  else
    inst = cds::gen_unit_disk(a.n, a.r, a.seed);
  attach_vectors(inst, a);
  std::string text = cds::serialize_instance(inst);
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string problem, instance_path, profile = "dom", mode = "auto", out;
  std::int64_t quota = -1;
  int k = -1;
  bool binary_guess = false;
};

int run_solve(const SolveArgs& a) {
  bool partial = a.problem == "pcds" || a.problem == "pgcds";
  bool generalized = a.problem == "pgcds" || a.problem == "bgcds";
  if (partial && a.quota < 0) {
    std::cerr << "error: " << a.problem << " needs --quota\n";
    return kExitUsage;
  }
  if (!partial && a.k < 1) {
    std::cerr << "error: " << a.problem << " needs --k >= 1\n";
    return kExitUsage;
  }
  if (!generalized && a.profile != "dom") {
    std::cerr << "error: " << a.problem << " supports only --profile dom\n";
    return kExitUsage;
  }

  cds::Instance inst = cds::parse_instance(read_file(a.instance_path));
  cds::SolveMode mode = parse_mode(a.mode);
  cds::GuessStrategy strat =
      a.binary_guess ? cds::GuessStrategy::binary_search : cds::GuessStrategy::linear_scan;

  std::optional<cds::Solution> sol;
  if (a.problem == "pcds") {
    sol = cds::solve_pcds(inst.graph, a.quota, mode);
  } else if (a.problem == "bcds") {
    sol = cds::solve_bcds(inst.graph, a.k, mode, strat);
  } else {
    cds::ProfitFn f = profile_fn(a.profile, inst);
    if (a.problem == "pgcds")
      sol = cds::solve_pgcds(inst.graph, f, a.quota, mode);
    else
      sol = cds::solve_bgcds(inst.graph, f, a.k, mode, strat);
  }
  if (!sol) {
    std::cerr << "infeasible: quota cannot be met\n";
    return kExitInfeasible;
  }

  cds::SolutionRecord rec{sol->objective, sol->chosen, sol->tree.edges};
  std::string text = cds::serialize_solution(rec);
  std::cout << a.problem << " " << (inst.label.empty() ? a.instance_path : inst.label)
            << " objective=" << sol->objective << " size=" << sol->size()
            << " engine=" << cds::engine_name(sol->meta.engine) << "\n";
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string problem, instance_path, profile = "dom";
  std::int64_t quota = -1;
  int k = -1;
};

std::optional<cds::OracleSolution> run_oracle_raw(const std::string& problem,
                                                  const cds::Instance& inst,
                                                  const std::string& profile, std::int64_t quota,
                                                  int k, const cds::OracleCache* cache) {
  std::ostringstream key;
  key << problem << "|profile=" << profile << "|q=" << quota << "|k=" << k << "|"
      << cds::serialize_instance(inst);
  return cds::cached_oracle(cache, key.str(), [&]() -> std::optional<cds::OracleSolution> {
    if (problem == "pcds") return cds::opt_pcds(inst.graph, quota);
    if (problem == "bcds") return cds::opt_bcds(inst.graph, k);
    cds::ProfitFn f = profile_fn(profile, inst);
    if (problem == "pgcds") return cds::opt_pgcds(inst.graph, f, quota);
    return cds::opt_bgcds(inst.graph, f, k);
  });
}

int run_oracle(const OracleArgs& a) {
  cds::Instance inst = cds::parse_instance(read_file(a.instance_path));
  bool partial = a.problem == "pcds" || a.problem == "pgcds";
  if ((partial && a.quota < 0) || (!partial && a.k < 1)) {
    std::cerr << "error: missing --quota / --k\n";
    return kExitUsage;
  }
  auto cache = cache_from_env();
  auto sol = run_oracle_raw(a.problem, inst, a.profile, a.quota, a.k,
                            cache ? &*cache : nullptr);
  if (!sol) {
    std::cerr << "infeasible: no connected set reaches the quota\n";
    return kExitInfeasible;
  }
  std::cout << "opt " << a.problem << " objective=" << sol->objective << " size=" << sol->size()
            << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: recomputes everything from the two files alone. Deliberately
// self-contained (plain BFS / matching below) so it never trusts the solver.

struct VerifyArgs {
  std::string instance_path, solution_path, problem, profile = "dom";
  std::int64_t quota = -1;
  int k = -1;
};

std::int64_t verify_objective(const cds::Instance& inst, const std::string& profile,
                              const std::vector<int>& chosen) {
  const cds::Graph& g = inst.graph;
  std::vector<char> dominated(g.n, 0);
  for (int v : chosen) {
    dominated[v] = 1;
    for (int u : g.adj[v]) dominated[u] = 1;
  }
  if (profile == "dom") {
    std::int64_t c = 0;
    for (char b : dominated) c += b;
    return c;
  }
  if (profile == "weighted") {
    std::int64_t c = 0;
    for (int v = 0; v < g.n; ++v)
      if (dominated[v]) c += (*inst.weights)[v];
    return c;
  }
  // capacitated: independent augmenting-path matching over capacity slots
  const auto& cap = *inst.capacities;
  std::vector<int> slot_of_chooser;  // slot -> chooser index
  std::vector<std::vector<int>> chooser_slots(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (int s = 0; s < cap[chosen[i]]; ++s) {
      chooser_slots[i].push_back(static_cast<int>(slot_of_chooser.size()));
      slot_of_chooser.push_back(static_cast<int>(i));
    }
  std::vector<std::vector<int>> can_take(g.n);  // candidate -> chooser indexes
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    can_take[chosen[i]].push_back(static_cast<int>(i));
    for (int u : g.adj[chosen[i]]) can_take[u].push_back(static_cast<int>(i));
  }
  std::vector<int> owner(slot_of_chooser.size(), -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int cand) {
    for (int ch : can_take[cand])
      for (int slot : chooser_slots[ch]) {
        if (visited[slot]) continue;
        visited[slot] = 1;
        if (owner[slot] < 0 || augment(owner[slot])) {
          owner[slot] = cand;
          return true;
        }
      }
    return false;
  };
  std::int64_t matched = 0;
  for (int cand = 0; cand < g.n; ++cand) {
    if (can_take[cand].empty()) continue;
    visited.assign(slot_of_chooser.size(), 0);
    if (augment(cand)) ++matched;
  }
  return matched;
}

int run_verify(const VerifyArgs& a) {
  cds::Instance inst = cds::parse_instance(read_file(a.instance_path));
  cds::SolutionRecord sol = cds::parse_solution(read_file(a.solution_path));
  const cds::Graph& g = inst.graph;
  std::vector<std::string> violations;

  const auto& chosen = sol.chosen.ids();
  for (int v : chosen)
    if (v < 0 || v >= g.n) violations.push_back("vertex " + std::to_string(v) + " out of range");

  if (chosen.empty()) violations.push_back("empty solution");

  if (violations.empty()) {
    // connectivity of the chosen set, plain BFS over the induced subgraph
    std::vector<char> in(g.n, 0), seen(g.n, 0);
    for (int v : chosen) in[v] = 1;
    std::vector<int> stack = {chosen.front()};
    seen[chosen.front()] = 1;
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
    if (reached != chosen.size()) violations.push_back("chosen set is not connected");

    // the tree must be a spanning tree of the chosen set using graph edges
    if (sol.tree_edges.size() + 1 != chosen.size()) {
      violations.push_back("tree edge count is not size-1");
    } else {
      std::vector<char> tseen(g.n, 0);
      std::vector<std::vector<int>> tadj(g.n);
      bool edges_ok = true;
      for (auto [u, v] : sol.tree_edges) {
        if (u < 0 || u >= g.n || v < 0 || v >= g.n || !in[u] || !in[v] ||
            !std::binary_search(g.adj[u].begin(), g.adj[u].end(), v)) {
          violations.push_back("tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " is not a graph edge inside the chosen set");
          edges_ok = false;
          break;
        }
        tadj[u].push_back(v);
        tadj[v].push_back(u);
      }
      if (edges_ok) {
        std::vector<int> tstack = {chosen.front()};
        tseen[chosen.front()] = 1;
        std::size_t treached = 0;
        while (!tstack.empty()) {
          int v = tstack.back();
          tstack.pop_back();
          ++treached;
          for (int u : tadj[v])
            if (!tseen[u]) {
              tseen[u] = 1;
              tstack.push_back(u);
            }
        }
        if (treached != chosen.size()) violations.push_back("tree does not span the chosen set");
      }
    }

    std::int64_t objective = verify_objective(inst, a.profile, chosen);
    if (objective != sol.objective)
      violations.push_back("objective mismatch: file says " + std::to_string(sol.objective) +
                           ", recount is " + std::to_string(objective));

    bool partial = a.problem == "pcds" || a.problem == "pgcds";
    if (partial && a.quota >= 0 && objective < a.quota)
      violations.push_back("coverage " + std::to_string(objective) + " misses quota " +
                           std::to_string(a.quota));
    if (!partial && a.k >= 1 && static_cast<int>(chosen.size()) > a.k)
      violations.push_back("size " + std::to_string(chosen.size()) + " exceeds budget " +
                           std::to_string(a.k));
  }

  if (violations.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const auto& v : violations) std::cout << "violation: " << v << "\n";
  return kExitViolation;
}

// ---------------------------------------------------------------------------
// decompose

int run_decompose(const std::string& instance_path, int k) {
  cds::Instance inst = cds::parse_instance(read_file(instance_path));
  const cds::Graph& g = inst.graph;
  if (g.edge_count() != static_cast<std::size_t>(g.n) - 1 ||
      cds::connected_components(g).size() != 1) {
    std::cerr << "error: instance is not a tree\n";
    return kExitUsage;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) edges.emplace_back(u, v);
  std::vector<int> labels(g.n);
  for (int v = 0; v < g.n; ++v) labels[v] = v;
  cds::RootedTree t = cds::make_rooted_tree(labels, edges, 0, [&](int v) {
    return inst.weights ? (*inst.weights)[v] : 1;
  });

  auto parts = cds::decompose_13(t, k);
  if (t.size() <= k) {
    std::cout << "no split needed (" << t.size() << " <= k)\n";
  } else {
    auto [t1, t2] = cds::jordan_split(t);
    std::cout << "top split case " << (t1.size() >= 3 * k - 1 ? 1 : 2) << " (|T1|=" << t1.size()
              << ", |T2|=" << t2.size() << ")\n";
  }
  std::cout << "parts " << parts.size() << ":";
  for (const auto& p : parts) std::cout << " " << p.size();
  std::cout << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string corpus_dir, problem, profile = "dom", mode = "auto", out;
  double quota_frac = 0.5;
  int k = 2;
  int lookahead_c = 0;  // 0 = derive from spider labels
};

struct BenchRow {
  std::string instance, label, problem, param;
  std::string objective, size, opt, bound, ratio, engine, ms;

  std::string csv() const {
    return instance + "," + label + "," + problem + "," + param + "," + objective + "," + size +
           "," + opt + "," + bound + "," + ratio + "," + engine + "," + ms;
  }
};

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::vector<BenchRow> bench_one(const std::filesystem::path& path, const BenchArgs& a,
                                const cds::OracleCache* cache) {
  std::vector<BenchRow> rows;
  cds::Instance inst = cds::parse_instance(read_file(path.string()));
  const cds::Graph& g = inst.graph;
  bool partial = a.problem == "pcds" || a.problem == "pgcds";
  bool generalized = a.problem == "pgcds" || a.problem == "bgcds";
  cds::SolveMode mode = parse_mode(a.mode);

  std::int64_t quota = 0;
  if (a.problem == "pcds") {
    quota = static_cast<std::int64_t>(std::ceil(a.quota_frac * g.n));
  } else if (a.problem == "pgcds") {
    cds::ProfitFn f = profile_fn(a.profile, inst);
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    quota = static_cast<std::int64_t>(std::ceil(a.quota_frac * f.eval(cds::VertexSet(all))));
  }

  BenchRow row;
  row.instance = path.filename().string();
  row.label = inst.label;
  row.problem = a.problem;
  row.param = partial ? "q=" + std::to_string(quota) : "k=" + std::to_string(a.k);

  auto t0 = std::chrono::steady_clock::now();
  std::optional<cds::Solution> sol;
  if (a.problem == "pcds")
    sol = cds::solve_pcds(g, quota, mode);
  else if (a.problem == "bcds")
    sol = cds::solve_bcds(g, a.k, mode);
  else if (a.problem == "pgcds")
    sol = cds::solve_pgcds(g, profile_fn(a.profile, inst), quota, mode);
  else
    sol = cds::solve_bgcds(g, profile_fn(a.profile, inst), a.k, mode);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
  row.ms = fmt_double(ms.count());

  if (!sol) {
    row.engine = "infeasible";
    rows.push_back(row);
    return rows;
  }
  row.objective = std::to_string(sol->objective);
  row.size = std::to_string(sol->size());
  row.engine = cds::engine_name(sol->meta.engine);

  if (g.n <= cds::kOracleMaxVertices) {
    auto opt = run_oracle_raw(a.problem, inst, a.profile, quota, a.k, cache);
    if (opt) {
      if (partial) {
        row.opt = std::to_string(opt->size());
        double bound = a.problem == "pcds"
                           ? cds::pcds_size_bound(opt->size(), cds::max_degree(g))
                           : cds::pgcds_size_bound(opt->size(), quota);
        row.bound = fmt_double(bound);
        if (opt->size() > 0)
          row.ratio = fmt_double(static_cast<double>(sol->size()) / opt->size());
      } else {
        row.opt = std::to_string(opt->objective);
        row.bound = std::to_string(cds::budgeted_objective_floor(opt->objective));
        if (opt->objective > 0)
          row.ratio = fmt_double(static_cast<double>(sol->objective) / opt->objective);
      }
    }
  }
  rows.push_back(row);

  // adversarial baseline on spider instances
  if (a.problem == "bcds" && inst.label.rfind("spider", 0) == 0) {
    int c = a.lookahead_c;
    if (c <= 0) {
      int h = 0, m = 0, l = 0;
      if (std::sscanf(inst.label.c_str(), "spider-h%d-c%d-m%d-l%d", &h, &c, &m, &l) != 4) c = 1;
    }
    auto t1 = std::chrono::steady_clock::now();
    cds::Solution la = cds::lookahead_greedy_bcds(g, a.k, c);
    auto la_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t1);
    BenchRow lrow;
    lrow.instance = row.instance;
    lrow.label = row.label;
    lrow.problem = "bcds-lookahead";
    lrow.param = "k=" + std::to_string(a.k) + ";c=" + std::to_string(c);
    lrow.objective = std::to_string(la.objective);
    lrow.size = std::to_string(la.size());
    lrow.opt = std::to_string(sol->objective);  // the solver is the comparator
    if (sol->objective > 0)
      lrow.ratio = fmt_double(static_cast<double>(la.objective) / sol->objective);
    lrow.engine = "lookahead";
    lrow.ms = fmt_double(la_ms.count());
    rows.push_back(lrow);
  }
  return rows;
}

int run_bench(const BenchArgs& a) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(a.corpus_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cds") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  auto cache = cache_from_env();
  const cds::OracleCache* cache_ptr = cache ? &*cache : nullptr;

  std::vector<std::future<std::vector<BenchRow>>> futures;
  futures.reserve(files.size());
  for (const auto& f : files)
    futures.push_back(
        std::async(std::launch::async, [&, f]() { return bench_one(f, a, cache_ptr); }));

  bool hard_error = false;
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    try {
      auto part = futures[i].get();
      rows.insert(rows.end(), part.begin(), part.end());
    } catch (const std::exception& e) {
      BenchRow row;
      row.instance = files[i].filename().string();
      row.problem = a.problem;
      row.engine = std::string("error:") + e.what();
      rows.push_back(row);
      hard_error = true;
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
    if (x.instance != y.instance) return x.instance < y.instance;
    return x.problem < y.problem;
  });

  std::ostringstream csv;
  csv << "instance,label,problem,param,objective,size,opt,bound,ratio,engine,ms\n";
  for (const auto& r : rows) csv << r.csv() << "\n";
  if (a.out.empty())
    std::cout << csv.str();
  else
    write_file(a.out, csv.str());
  return hard_error ? 1 : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial / budgeted connected dominating set toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);
  GenArgs ga;
  auto* gen_spider_cmd = gen->add_subcommand("spider", "chain of high-degree heads with legs");
  gen_spider_cmd->add_option("--heads", ga.heads)->required();
  gen_spider_cmd->add_option("--c", ga.c)->required();
  gen_spider_cmd->add_option("--legs", ga.legs)->required();
  gen_spider_cmd->add_option("--leglen", ga.leglen);
  auto* gen_gnp_cmd = gen->add_subcommand("gnp", "Erdos-Renyi, largest component");
  gen_gnp_cmd->add_option("--n", ga.n)->required();
  gen_gnp_cmd->add_option("--p", ga.p)->required();
  gen_gnp_cmd->add_option("--seed", ga.seed)->required();
  auto* gen_disk_cmd = gen->add_subcommand("unitdisk", "random geometric, largest component");
  gen_disk_cmd->add_option("--n", ga.n)->required();
  gen_disk_cmd->add_option("--r", ga.r)->required();
  gen_disk_cmd->add_option("--seed", ga.seed)->required();
  for (auto* sub : {gen_spider_cmd, gen_gnp_cmd, gen_disk_cmd}) {
    sub->add_option("-o,--out", ga.out);
    sub->add_option("--wmax", ga.wmax, "attach uniform weights in [0,wmax]");
    sub->add_option("--cmin", ga.cmin, "attach uniform capacities, lower bound");
    sub->add_option("--cmax", ga.cmax, "attach uniform capacities, upper bound");
  }
  gen_spider_cmd->add_option("--seed", ga.seed, "seed for attached weight/capacity vectors");

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver pipeline");
  SolveArgs sa;
  solve->add_option("problem", sa.problem)->required()->check(
      CLI::IsMember({"pcds", "bcds", "pgcds", "bgcds"}));
  solve->add_option("instance", sa.instance_path)->required();
  solve->add_option("--quota", sa.quota);
  solve->add_option("--k", sa.k);
  solve->add_option("--profile", sa.profile)->check(CLI::IsMember({"dom", "weighted", "capacitated"}));
  solve->add_option("--mode", sa.mode)->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  solve->add_flag("--binary-guess", sa.binary_guess, "binary search over the optimum guess");
  solve->add_option("-o,--out", sa.out);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive exact optimum (small instances)");
  OracleArgs oa;
  oracle->add_option("problem", oa.problem)->required()->check(
      CLI::IsMember({"pcds", "bcds", "pgcds", "bgcds"}));
  oracle->add_option("instance", oa.instance_path)->required();
  oracle->add_option("--quota", oa.quota);
  oracle->add_option("--k", oa.k);
  oracle->add_option("--profile", oa.profile)
      ->check(CLI::IsMember({"dom", "weighted", "capacitated"}));

  // verify
  auto* verify = app.add_subcommand("verify", "independently check a solution file");
  VerifyArgs va;
  verify->add_option("instance", va.instance_path)->required();
  verify->add_option("solution", va.solution_path)->required();
  verify->add_option("--problem", va.problem)->required()->check(
      CLI::IsMember({"pcds", "bcds", "pgcds", "bgcds"}));
  verify->add_option("--quota", va.quota);
  verify->add_option("--k", va.k);
  verify->add_option("--profile", va.profile)
      ->check(CLI::IsMember({"dom", "weighted", "capacitated"}));

  // decompose
  auto* decomp = app.add_subcommand("decompose", "split a tree instance into parts of size <= k");
  std::string decomp_path;
  int decomp_k = 3;
  decomp->add_option("instance", decomp_path)->required();
  decomp->add_option("--k", decomp_k)->required();

  // bench
  auto* bench = app.add_subcommand("bench", "run a corpus and emit a CSV report");
  BenchArgs ba;
  bench->add_option("corpus", ba.corpus_dir)->required();
  bench->add_option("--problem", ba.problem)->required()->check(
      CLI::IsMember({"pcds", "bcds", "pgcds", "bgcds"}));
  bench->add_option("--quota-frac", ba.quota_frac);
  bench->add_option("--k", ba.k);
  bench->add_option("--profile", ba.profile)
      ->check(CLI::IsMember({"dom", "weighted", "capacitated"}));
  bench->add_option("--mode", ba.mode)->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  bench->add_option("--lookahead-c", ba.lookahead_c);
  bench->add_option("-o,--out", ba.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      for (auto* sub : {gen_spider_cmd, gen_gnp_cmd, gen_disk_cmd})
        if (sub->parsed()) return run_gen(sub->get_name(), ga);
      return kExitUsage;
    }
    if (solve->parsed()) return run_solve(sa);
    if (oracle->parsed()) return run_oracle(oa);
    if (verify->parsed()) return run_verify(va);
    if (decomp->parsed()) return run_decompose(decomp_path, decomp_k);
    if (bench->parsed()) return run_bench(ba);
  } catch (const cds::TooLargeError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const cds::BudgetTooSmallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cds::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
