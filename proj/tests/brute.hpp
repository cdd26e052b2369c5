#pragma once

// Slow reference implementations used only to produce expected values in tests.
// None of these share code with the library's search routines.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cycram/graph.hpp"

namespace brute {

using cycram::Graph;
using cycram::Vertex;

inline bool adjacent(const Graph& g, int u, int v) { return g.neighbors(u).contains(v); }

/// Does g contain a cycle of exactly ell vertices? Plain DFS over simple paths
/// from every start, closing back at the start.
inline bool has_cycle(const Graph& g, int ell) {
  const int n = g.order();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int, int, int)> dfs = [&](int start, int cur, int len) {
    if (len == ell) return adjacent(g, cur, start);
    for (int w = start + 1; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !adjacent(g, cur, w)) continue;
      used[static_cast<std::size_t>(w)] = 1;
      bool ok = dfs(start, w, len + 1);
      used[static_cast<std::size_t>(w)] = 0;
      if (ok) return true;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    used[static_cast<std::size_t>(s)] = 1;
    bool ok = dfs(s, s, 1);
    used[static_cast<std::size_t>(s)] = 0;
    if (ok) return true;
  }
  return false;
}

/// Independence number by enumerating every subset (order <= 22).
inline int alpha(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    int pc = __builtin_popcount(m);
    if (pc <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if ((m >> u) & 1U)
        for (int v = u + 1; v < n && ok; ++v)
          if (((m >> v) & 1U) && adjacent(g, u, v)) ok = false;
    if (ok) best = pc;
  }
  return best;
}

/// Graph on n vertices from a bitmask over pairs (0,1),(0,2),...,(n-2,n-1).
inline Graph from_pair_mask(int n, std::uint64_t mask) {
  cycram::GraphBuilder b(n);
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if ((mask >> idx) & 1U) b.add_edge(u, v);
  return std::move(b).build();
}

/// Every labelled graph on N vertices is C_ell-free-with-small-alpha or not;
/// true iff some graph avoids both a red C_ell and a blue K_n.
inline bool some_colouring_avoids(int N, int ell, int n) {
  const int pairs = N * (N - 1) / 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
    Graph g = from_pair_mask(N, m);
    if (alpha(g) < n && !has_cycle(g, ell)) return true;
  }
  return false;
}

/// Hand-rolled generator for property tests: a graph with order in [lo, hi] and
/// a random edge density.
struct GraphGen {
  std::mt19937_64 rng;
  explicit GraphGen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double unit() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

  Graph graph(int lo, int hi) {
    int n = uniform(lo, hi);
    double p = unit();
    cycram::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit() < p) b.add_edge(u, v);
    return std::move(b).build();
  }
  Graph graph(int lo, int hi, double p) {
    int n = uniform(lo, hi);
    cycram::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit() < p) b.add_edge(u, v);
    return std::move(b).build();
  }
  std::vector<Vertex> permutation(int n) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
    return p;
  }
};

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  cycram::GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

/// Max-degree-k check by brute force: does every vertex of g have degree >= k?
inline bool min_degree_at_least(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < k) return false;
  return true;
}

}  // namespace brute
