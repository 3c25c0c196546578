#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "cds/graph.hpp"
#include "cds/profit.hpp"

namespace cds {

inline constexpr int kEnumerationMaxVertices = 20;
inline constexpr int kOracleMaxVertices = 14;

/// Every nonempty vertex subset of size <= max_size inducing a connected
/// subgraph, each exactly once, in size-then-lexicographic order.
inline std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, int max_size) {
  if (g.n > kEnumerationMaxVertices)
    throw TooLargeError("connected-subset enumeration supports n <= " +
                        std::to_string(kEnumerationMaxVertices));
  auto adj = detail::adjacency_masks(g);
  std::vector<std::uint64_t> masks;
  detail::for_each_connected_subset_mask(adj, g.n, std::min(max_size, g.n),
                                         [&](std::uint64_t s) { masks.push_back(s); });
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int sa = std::popcount(a), sb = std::popcount(b);
    if (sa != sb) return sa < sb;
    return detail::lex_less_same_size(a, b);
  });
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(detail::set_from_mask(m));
  return out;
}

struct OracleSolution {
  VertexSet chosen;
  std::int64_t objective = 0;

  int size() const { return static_cast<int>(chosen.size()); }
};

namespace detail {

inline void check_oracle_size(const Graph& g) {
  if (g.n > kOracleMaxVertices)
    throw TooLargeError("exhaustive oracle supports n <= " + std::to_string(kOracleMaxVertices));
}

template <typename Objective>
std::optional<OracleSolution> oracle_min_size(const Graph& g, std::int64_t quota,
                                              Objective&& objective) {
  check_oracle_size(g);
  if (quota <= 0) return OracleSolution{VertexSet{}, 0};
  for (const VertexSet& s : enumerate_connected_subsets(g, g.n)) {
    std::int64_t val = objective(s);
    if (val >= quota) return OracleSolution{s, val};
  }
  return std::nullopt;
}

template <typename Objective>
OracleSolution oracle_max_objective(const Graph& g, int k, Objective&& objective) {
  check_oracle_size(g);
  if (k < 1) throw std::invalid_argument("budget must be at least 1");
  OracleSolution best{VertexSet{}, -1};
  for (const VertexSet& s : enumerate_connected_subsets(g, std::min(k, g.n))) {
    std::int64_t val = objective(s);
    if (val > best.objective) best = {s, val};
  }
  return best;
}

inline std::int64_t dominated_count(const std::vector<std::uint64_t>& nbr, const VertexSet& s) {
  std::uint64_t covered = 0;
  for (int v : s) covered |= nbr[v];
  return std::popcount(covered);
}

}  // namespace detail

/// Minimum-size connected set dominating at least `quota` vertices.
inline std::optional<OracleSolution> opt_pcds(const Graph& g, std::int64_t quota) {
  auto nbr = detail::neighborhood_masks(g);
  return detail::oracle_min_size(g, quota,
                                 [&](const VertexSet& s) { return detail::dominated_count(nbr, s); });
}

/// Maximum dominated count over connected sets of size <= k.
inline OracleSolution opt_bcds(const Graph& g, int k) {
  auto nbr = detail::neighborhood_masks(g);
  return detail::oracle_max_objective(
      g, k, [&](const VertexSet& s) { return detail::dominated_count(nbr, s); });
}

/// Generalized variants driven by an arbitrary profit function.
inline OracleSolution opt_bgcds(const Graph& g, const ProfitFn& f, int k) {
  return detail::oracle_max_objective(g, k, [&](const VertexSet& s) { return f.eval(s); });
}

inline std::optional<OracleSolution> opt_pgcds(const Graph& g, const ProfitFn& f,
                                               std::int64_t quota) {
  return detail::oracle_min_size(g, quota, [&](const VertexSet& s) { return f.eval(s); });
}

// ---------------------------------------------------------------------------
// Disk cache for oracle results.
//
// One binary file per record, named <fnv1a64-of-key>.orc under the cache
// directory. Record layout, little-endian:
//   magic   "CDSORC1\n"               8 bytes
//   key_len u32, key bytes            full key material, checked on load
//   feasible u8
//   objective i64, size u32, vertex ids u32[size]
// The key embeds the problem name, parameters, and the serialized instance,
// so a hash collision is detected by the key comparison and treated as a
// miss.

class OracleCache {
 public:
  explicit OracleCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::optional<std::optional<OracleSolution>> lookup(const std::string& key) const {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    char magic[8];
    in.read(magic, 8);
    if (!in || std::string(magic, 8) != kMagic) return std::nullopt;
    std::uint32_t key_len = read_u32(in);
    std::string stored(key_len, '\0');
    in.read(stored.data(), key_len);
    if (!in || stored != key) return std::nullopt;
    std::uint8_t feasible = 0;
    in.read(reinterpret_cast<char*>(&feasible), 1);
    if (!in) return std::nullopt;
    if (!feasible)  // a cached infeasible answer: hit with an empty payload
      return std::optional<std::optional<OracleSolution>>{std::in_place};
    OracleSolution sol;
    in.read(reinterpret_cast<char*>(&sol.objective), sizeof sol.objective);
    std::uint32_t size = read_u32(in);
    std::vector<int> ids(size);
    for (auto& v : ids) v = static_cast<int>(read_u32(in));
    if (!in) return std::nullopt;
    sol.chosen = VertexSet(std::move(ids));
    return std::optional<std::optional<OracleSolution>>{std::move(sol)};
  }

  void store(const std::string& key, const std::optional<OracleSolution>& sol) const {
    std::ofstream out(path_for(key), std::ios::binary | std::ios::trunc);
    out.write(kMagic, 8);
    write_u32(out, static_cast<std::uint32_t>(key.size()));
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
    std::uint8_t feasible = sol.has_value();
    out.write(reinterpret_cast<const char*>(&feasible), 1);
    if (sol) {
      out.write(reinterpret_cast<const char*>(&sol->objective), sizeof sol->objective);
      write_u32(out, static_cast<std::uint32_t>(sol->chosen.size()));
      for (int v : sol->chosen) write_u32(out, static_cast<std::uint32_t>(v));
    }
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  static constexpr const char* kMagic = "CDSORC1\n";

  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

  static std::uint32_t read_u32(std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
  }

  static void write_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
  }

  std::filesystem::path path_for(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.orc",
                  static_cast<unsigned long long>(fnv1a(key)));
    return dir_ / name;
  }

  std::filesystem::path dir_;
};

/// Runs `compute` through the cache when one is given.
template <typename Compute>
std::optional<OracleSolution> cached_oracle(const OracleCache* cache, const std::string& key,
                                            Compute&& compute) {
  if (cache) {
    if (auto hit = cache->lookup(key)) return *hit;
  }
  std::optional<OracleSolution> result = compute();
  if (cache) cache->store(key, result);
  return result;
}

}  // namespace cds
