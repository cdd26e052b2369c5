#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

// ---------------------------------------------------------------------------
// Fixed-length cycles

struct CycleSearchOptions {
  /// Blocks up to this order use the dense subset DP (2^order table).
  int dense_dp_limit = 24;
  /// Larger blocks try a sparse subset DP before falling back to colour coding.
  std::size_t sparse_state_budget = std::size_t{1} << 22;
  /// Colour coding runs enough trials that a present cycle is missed with
  /// probability below 2^-failure_exponent.
  double failure_exponent = 40.0;
  std::uint64_t colour_seed = 0x9e3779b97f4a7c15ULL;
  /// Upper bound on colour-coding word operations before giving up.
  double colour_work_budget = 4e10;
};

/// An ℓ-cycle in g, or nullopt when none exists. Blocks (biconnected
/// components) with fewer than ℓ vertices are skipped outright.
/// Throws std::invalid_argument for ℓ < 3 and CapacityError when a block is too
/// large for every exact strategy.
std::optional<Cycle> find_cycle_exact(const Graph& g, int ell, const CycleSearchOptions& opts = {});

/// Vertex sets of the biconnected components with at least 3 vertices.
std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g);

// ---------------------------------------------------------------------------
// Independent sets

inline constexpr int kExactIndependenceLimit = 64;

/// Maximum independent set by branch and bound with greedy clique-cover bounds.
/// Throws CapacityError when order exceeds `limit` (at most 64).
VertexSet max_independent_set(const Graph& g, int limit = kExactIndependenceLimit);
int independence_number(const Graph& g, int limit = kExactIndependenceLimit);

// ---------------------------------------------------------------------------
// Certificates

struct Certificate {
  enum class Kind { RedCycle, BlueIndependentSet };
  Kind kind = Kind::RedCycle;
  std::vector<Vertex> vertices;

  static Certificate red_cycle(std::vector<Vertex> cycle) { return {Kind::RedCycle, std::move(cycle)}; }
  static Certificate blue_set(std::vector<Vertex> set) { return {Kind::BlueIndependentSet, std::move(set)}; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Pure re-check: a red ℓ-cycle or n pairwise red-nonadjacent vertices.
/// Throws std::invalid_argument if any vertex is out of range.
bool verify_certificate(const EdgeColoring& c, const Certificate& cert, int ell, int n);

/// {"kind":"red_cycle","vertices":[...],"ell":ℓ} or
/// {"kind":"blue_independent_set","vertices":[...],"n":n}
std::string certificate_to_json(const Certificate& cert, int ell, int n);
struct ParsedCertificate {
  Certificate cert;
  int ell = 0;
  int n = 0;
};
ParsedCertificate certificate_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Exhaustive Ramsey search

/// Canonical adjacency code of a graph with at most 11 vertices: the minimum
/// upper-triangle bit string over all labellings reachable by
/// individualisation-refinement. Isomorphic graphs get equal codes.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(std::uint64_t code, int order);

struct RamseyExactOptions {
  int threads = 1;
  std::size_t max_graphs_per_level = 5'000'000;
};

struct RamseyExactResult {
  /// Smallest N with no C_ℓ-free red graph of independence number < n.
  std::optional<int> value;
  /// Largest order examined.
  int searched_to = 0;
  /// Number of non-isomorphic avoiding graphs at each order 0..searched_to.
  std::vector<std::size_t> avoiding_counts;
  /// Canonical avoiding graph of the largest order that has one.
  std::optional<Graph> extremal_example;
  bool budget_exceeded = false;
};

/// Orderly vertex-by-vertex generation: both properties are hereditary, so
/// every avoiding graph on N vertices extends one on N - 1.
RamseyExactResult ramsey_exact(int ell, int n, int max_order, const RamseyExactOptions& opts = {});

inline int ramsey_formula(int ell, int n) { return (ell - 1) * (n - 1) + 1; }

}  // namespace cycram
